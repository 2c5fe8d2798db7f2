"""Exhaustive enumerators for both sides of the correspondence.

The subgraph enumerator is deliberately independent of the word-to-subgraph
map so it can serve as an unbiased oracle in verification.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .subgraphs import Arc, CycleSubgraph, maximal_arcs
from .words import CycleParams, Word

LEX_ORDER = "DRU"  # enumeration order for words: D < R < U


def enumerate_words(params: CycleParams) -> Iterator[Word]:
    """Yield every valid word exactly once, lexicographically with D < R < U."""
    remaining = {"D": params.n - params.k, "R": params.k, "U": params.k}
    buffer: list[str] = []
    target = params.word_length

    def descend() -> Iterator[Word]:
        if len(buffer) == target:
            yield Word("".join(buffer), params)
            return
        for letter in LEX_ORDER:
            if remaining[letter] == 0 or (not buffer and letter == "D"):
                continue
            remaining[letter] -= 1
            buffer.append(letter)
            yield from descend()
            buffer.pop()
            remaining[letter] += 1

    yield from descend()


def enumerate_subgraphs(params: CycleParams) -> Iterator[CycleSubgraph]:
    """Yield every n-edge, k-component subgraph exactly once.

    Walks all n-subsets of the 2n edge ids, groups each into maximal arcs,
    and completes each selection with every admissible set of isolated
    vertices.  Distinct selections give distinct canonical subgraphs, so the
    stream is duplicate-free.
    """
    cycle_len = params.cycle_length
    for edge_subset in combinations(range(cycle_len), params.n):
        chosen = set(edge_subset)
        arcs = maximal_arcs(chosen, cycle_len)
        if len(arcs) > params.k:
            continue
        endpoints: set[int] = set()
        for e in chosen:
            endpoints.add(e)
            endpoints.add((e + 1) % cycle_len)
        free = [v for v in range(cycle_len) if v not in endpoints]
        for isolated in combinations(free, params.k - len(arcs)):
            full = tuple(arcs) + tuple(Arc(v, 0) for v in isolated)
            yield CycleSubgraph(full, params)
