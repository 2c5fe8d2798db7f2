"""On-disk formats: the JSON subgraph document plus DOT and plain-text renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DocumentError
from .subgraphs import CycleSubgraph, normalize_edges
from .words import CycleParams


@dataclass(frozen=True)
class SubgraphDocument:
    """Order-insensitive wire form: chosen edge ids plus isolated vertices.

    Arcs are derived on load, never stored, which keeps the format minimal.
    """

    n: int
    edges: tuple[int, ...]
    isolated: tuple[int, ...]


def document_from_subgraph(graph: CycleSubgraph) -> SubgraphDocument:
    return SubgraphDocument(
        n=graph.params.n,
        edges=graph.edge_ids(),
        isolated=tuple(sorted(graph.isolated_vertices())),
    )


def document_to_subgraph(doc: SubgraphDocument, k: int) -> CycleSubgraph:
    """Reassemble the canonical subgraph; ``k`` supplies the expected component count."""
    params = CycleParams(doc.n, k)
    return normalize_edges(doc.edges, doc.isolated, params)


def document_json(doc: SubgraphDocument) -> str:
    """Canonical one-line JSON: keys in the order n, edges, isolated; arrays ascending."""
    payload = {"n": doc.n, "edges": sorted(doc.edges), "isolated": sorted(doc.isolated)}
    return json.dumps(payload, separators=(",", ":"))


def parse_document(text: str) -> SubgraphDocument:
    """Strict schema check; raises DocumentError on any deviation."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    if set(raw) != {"n", "edges", "isolated"}:
        raise DocumentError("document needs exactly the keys n, edges, isolated")
    n = raw["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError(f"n must be a positive integer, got {n!r}")
    edges = _int_array(raw["edges"], "edges", 2 * n)
    isolated = _int_array(raw["isolated"], "isolated", 2 * n)
    return SubgraphDocument(n=n, edges=edges, isolated=isolated)


def _int_array(value: object, name: str, bound: int) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise DocumentError(f"{name} must be an array")
    out = []
    for item in value:
        if isinstance(item, bool) or not isinstance(item, int):
            raise DocumentError(f"{name} entries must be integers, got {item!r}")
        if not 0 <= item < bound:
            raise DocumentError(f"{name} entry {item} outside 0..{bound - 1}")
        out.append(item)
    if len(set(out)) != len(out):
        raise DocumentError(f"{name} entries must be distinct")
    return tuple(out)


def render_ascii(graph: CycleSubgraph) -> str:
    """One line per component, in canonical arc order."""
    cycle_len = graph.params.cycle_length
    lines = []
    for arc in graph.arcs:
        if arc.edge_count == 0:
            lines.append(f"isolated {arc.start}")
        else:
            end = (arc.start + arc.edge_count) % cycle_len
            lines.append(f"arc {arc.start}..{end} ({arc.edge_count} edges)")
    return "\n".join(lines)


def render_dot(graph: CycleSubgraph) -> str:
    """The whole labelled cycle in DOT: chosen edges solid, absent edges dotted.

    Emits exactly one node statement per vertex (filled when the subgraph
    uses it) and one edge statement per cycle edge.
    """
    cycle_len = graph.params.cycle_length
    used = graph.vertex_set()
    chosen = set(graph.edge_ids())
    lines = ["graph cycle {"]
    for v in range(cycle_len):
        attr = " [style=filled]" if v in used else ""
        lines.append(f"  v{v}{attr};")
    for e in range(cycle_len):
        style = "solid" if e in chosen else "dotted"
        lines.append(f"  v{e} -- v{(e + 1) % cycle_len} [style={style}];")
    lines.append("}")
    return "\n".join(lines)
