"""Exact closed-form counts and their brute-force cross-checks.

All arithmetic is exact integer arithmetic; nothing here touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CountMismatchError
from .subgraphs import classify_subgraph
from .words import Branch, CycleParams


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with the convention that out-of-range b gives 0."""
    if a < 0:
        raise ValueError(f"binomial needs a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def count_w_star(params: CycleParams) -> int:
    """Number of star words: C(n+k-1, k-1) * C(n-1, k).  Zero when k = n."""
    n, k = params.n, params.k
    return binomial(n + k - 1, k - 1) * binomial(n - 1, k)


def count_w_zero(params: CycleParams) -> int:
    """Number of zero words: C(n+k, k) * C(n-1, k-1)."""
    n, k = params.n, params.k
    return binomial(n + k, k) * binomial(n - 1, k - 1)


@dataclass(frozen=True)
class CountTable:
    """Closed-form word counts for one (n, k), optionally with brute-force graph counts."""

    n: int
    k: int
    w_star: int
    w_zero: int
    g_star: int | None = None
    g_zero: int | None = None

    @property
    def w_total(self) -> int:
        return self.w_star + self.w_zero

    @property
    def g_total(self) -> int | None:
        if self.g_star is None or self.g_zero is None:
            return None
        return self.g_star + self.g_zero

    @property
    def matches(self) -> bool:
        """True when brute-force graph counts exist and agree with the closed forms."""
        return self.g_star == self.w_star and self.g_zero == self.w_zero


def count_table(params: CycleParams, brute_force: bool = False) -> CountTable:
    """Assemble the count table; with ``brute_force`` also enumerate and cross-check.

    The brute-force side counts subgraphs by direct enumeration, fully
    independent of the word-side formulas.  A disagreement means an
    implementation bug and raises :class:`CountMismatchError` carrying the
    offending table.
    """
    from .enumeration import enumerate_subgraphs

    w_star, w_zero = count_w_star(params), count_w_zero(params)
    if not brute_force:
        return CountTable(params.n, params.k, w_star, w_zero)
    g_star = g_zero = 0
    for graph in enumerate_subgraphs(params):
        if classify_subgraph(graph) is Branch.STAR:
            g_star += 1
        else:
            g_zero += 1
    table = CountTable(params.n, params.k, w_star, w_zero, g_star, g_zero)
    if not table.matches:
        raise CountMismatchError(
            f"brute-force counts g_star={g_star}, g_zero={g_zero} disagree with closed forms "
            f"w_star={w_star}, w_zero={w_zero} at n={params.n}, k={params.k}",
            table=table,
        )
    return table
