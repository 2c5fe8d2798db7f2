"""Arcs (paths on the even cycle) and canonical n-edge, k-component subgraphs.

Vertices live in 0..2n-1 with arithmetic mod 2n; edge id e stands for the
cycle edge {e, e+1 mod 2n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    FullCycleError,
    OverlapError,
    WrongComponentCountError,
    WrongEdgeCountError,
)
from .words import Branch, CycleParams


@dataclass(frozen=True)
class Arc:
    """One connected component: the path walking ``edge_count`` edges up from ``start``.

    ``edge_count == 0`` is the single isolated vertex ``start``; isolated
    vertices are full components and first-class citizens here.  Paths may
    wrap past the highest vertex label.
    """

    start: int
    edge_count: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.edge_count < 0:
            raise ValueError(f"arc needs start >= 0 and edge_count >= 0, got {self}")


def expand_arc(arc: Arc, params: CycleParams) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    """Explicit vertex sequence and edge list of the arc's path, reduced mod 2n."""
    cycle_len = params.cycle_length
    if not 0 <= arc.start < cycle_len:
        raise ValueError(f"arc start {arc.start} outside 0..{cycle_len - 1}")
    if arc.edge_count > params.n:
        raise ValueError(
            f"arc with {arc.edge_count} edges cannot occur in an {params.n}-edge subgraph"
        )
    vertices = tuple((arc.start + t) % cycle_len for t in range(arc.edge_count + 1))
    edges = tuple((vertices[t], vertices[t + 1]) for t in range(arc.edge_count))
    return vertices, edges


def arc_vertices(arc: Arc, params: CycleParams) -> tuple[int, ...]:
    return expand_arc(arc, params)[0]


def arc_edge_ids(arc: Arc, params: CycleParams) -> tuple[int, ...]:
    """Ids of the cycle edges the arc covers, in traversal order."""
    return tuple((arc.start + t) % params.cycle_length for t in range(arc.edge_count))


def arc_contains(arc: Arc, vertex: int, params: CycleParams) -> bool:
    return (vertex - arc.start) % params.cycle_length <= arc.edge_count


@dataclass(frozen=True)
class CycleSubgraph:
    """Canonical form: k pairwise vertex-disjoint arcs sorted by start, n edges total.

    Equality and hashing work on the canonical form, so bijectivity checks
    reduce to set comparisons.
    """

    arcs: tuple[Arc, ...]
    params: CycleParams

    def __post_init__(self) -> None:
        arcs = tuple(sorted(self.arcs, key=lambda a: a.start))
        object.__setattr__(self, "arcs", arcs)
        n, k = self.params.n, self.params.k
        cycle_len = self.params.cycle_length
        if len(arcs) != k:
            raise WrongComponentCountError(f"expected {k} components, got {len(arcs)}")
        total_edges = sum(a.edge_count for a in arcs)
        if total_edges != n:
            raise WrongEdgeCountError(f"expected {n} edges, got {total_edges}")
        covered: set[int] = set()
        for arc in arcs:
            verts = set(arc_vertices(arc, self.params))
            shared = covered & verts
            if shared:
                raise OverlapError(f"components overlap at vertices {sorted(shared)}")
            covered |= verts

    def vertex_set(self) -> frozenset[int]:
        out: set[int] = set()
        for arc in self.arcs:
            out.update(arc_vertices(arc, self.params))
        return frozenset(out)

    def edge_ids(self) -> tuple[int, ...]:
        ids: list[int] = []
        for arc in self.arcs:
            ids.extend(arc_edge_ids(arc, self.params))
        return tuple(sorted(ids))

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(a.start for a in self.arcs if a.edge_count == 0)

    def __str__(self) -> str:
        cycle_len = self.params.cycle_length
        parts = []
        for arc in self.arcs:
            if arc.edge_count == 0:
                parts.append(f"vertex {arc.start}")
            else:
                parts.append(f"arc {arc.start}..{(arc.start + arc.edge_count) % cycle_len}")
        return "{" + ", ".join(parts) + "}"


def classify_subgraph(graph: CycleSubgraph) -> Branch:
    """STAR when vertex 0 lies on no component, ZERO when some component holds it."""
    for arc in graph.arcs:
        if arc_contains(arc, 0, graph.params):
            return Branch.ZERO
    return Branch.STAR


def maximal_arcs(edge_ids: Iterable[int], cycle_length: int) -> list[Arc]:
    """Group distinct edge ids into maximal runs around the cycle.

    Raises FullCycleError when every edge is chosen: that selection has no
    run starts and is not a disjoint union of paths.
    """
    chosen = set(edge_ids)
    if len(chosen) == cycle_length:
        raise FullCycleError("all cycle edges chosen; the full cycle is not a union of paths")
    arcs = []
    for e in chosen:
        if (e - 1) % cycle_length in chosen:
            continue  # interior edge of its run
        length = 1
        while (e + length) % cycle_length in chosen:
            length += 1
        arcs.append(Arc(e, length))
    return sorted(arcs, key=lambda a: a.start)


def normalize_edges(
    edge_ids: Iterable[int],
    isolated: Iterable[int],
    params: CycleParams,
) -> CycleSubgraph:
    """Build the canonical subgraph from chosen edge ids plus isolated vertices.

    Validates, in order: no full cycle, exactly n edges, isolated vertices
    touch no chosen edge, and the component count equals k.
    """
    cycle_len = params.cycle_length
    chosen = set(edge_ids)
    lone = set(isolated)
    for e in chosen:
        if not 0 <= e < cycle_len:
            raise ValueError(f"edge id {e} outside 0..{cycle_len - 1}")
    for v in lone:
        if not 0 <= v < cycle_len:
            raise ValueError(f"vertex {v} outside 0..{cycle_len - 1}")
    arcs = maximal_arcs(chosen, cycle_len)
    if len(chosen) != params.n:
        raise WrongEdgeCountError(f"need exactly {params.n} edges, got {len(chosen)}")
    endpoints: set[int] = set()
    for e in chosen:
        endpoints.add(e)
        endpoints.add((e + 1) % cycle_len)
    stranded = lone & endpoints
    if stranded:
        raise OverlapError(f"isolated vertices {sorted(stranded)} sit on chosen edges")
    components = len(arcs) + len(lone)
    if components != params.k:
        raise WrongComponentCountError(f"need exactly {params.k} components, got {components}")
    arcs.extend(Arc(v, 0) for v in sorted(lone))
    return CycleSubgraph(tuple(arcs), params)
