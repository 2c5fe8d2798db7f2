"""Independent brute-force oracles the tests check the library against.

Nothing in here calls into the library's conversion paths; each oracle
recomputes its answer from first principles so disagreements point at real
bugs rather than shared mistakes.
"""

import itertools
import math


def profile_by_positions(letters: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recompute the untrimmed p/q sequences by scanning letter positions.

    p[i] counts non-U letters before/between/after the Us; q[0] is one less
    than the Ds before the first R, the rest count Ds between/after the Rs.
    """
    k = letters.count("U")
    u_at = [i for i, c in enumerate(letters) if c == "U"]
    cuts = [-1] + u_at + [len(letters)]
    p = tuple(
        sum(1 for j in range(cuts[i] + 1, cuts[i + 1]) if letters[j] != "U")
        for i in range(k + 1)
    )
    r_at = [i for i, c in enumerate(letters) if c == "R"]
    q = [sum(1 for j in range(r_at[0]) if letters[j] == "D") - 1]
    for i in range(len(r_at) - 1):
        q.append(sum(1 for j in range(r_at[i] + 1, r_at[i + 1]) if letters[j] == "D"))
    q.append(sum(1 for j in range(r_at[-1] + 1, len(letters)) if letters[j] == "D"))
    return p, tuple(q)


def words_by_filtering(n: int, k: int) -> list[str]:
    """All valid words via raw permutations and a first-letter filter; n <= 4 only."""
    letters = "D" * (n - k) + "R" * k + "U" * k
    distinct = sorted(set("".join(p) for p in itertools.permutations(letters)))
    return [w for w in distinct if w[0] != "D"]


def word_total_by_factorials(n: int, k: int) -> int:
    """Count words as all arrangements minus the ones starting with D."""
    total = math.factorial(n + k) // (math.factorial(k) ** 2 * math.factorial(n - k))
    if k == n:
        return total
    leading_d = math.factorial(n + k - 1) // (
        math.factorial(k) ** 2 * math.factorial(n - k - 1)
    )
    return total - leading_d


def path_vertices(start: int, edge_count: int, cycle_len: int) -> list[int]:
    return [(start + t) % cycle_len for t in range(edge_count + 1)]
