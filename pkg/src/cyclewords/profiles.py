"""Integer run-length profiles that pin a word down exactly.

A word is determined by (a) how many non-U letters sit before, between and
after its Us, and (b) how many Ds sit before, between and after its Rs.
These counts form the p- and q-sequences.  Star words drop the leading p
entry (always 0, the word starts with U) and zero words drop the leading q
entry (always -1, no D precedes the first R), so each variant stores exactly
the entries that carry information.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadProfileError
from .words import Branch, CycleParams, Word, classify_word


@dataclass(frozen=True)
class PQProfile:
    """A star or zero profile; construction checks lengths, signs and sums.

    Star variant: p has k entries summing to n, q has k+1 entries summing to
    n-k-1 (hence star profiles only exist for k <= n-1).  Zero variant: p has
    k+1 entries summing to n, q has k entries summing to n-k.
    """

    variant: Branch
    p: tuple[int, ...]
    q: tuple[int, ...]
    params: CycleParams

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        n, k = self.params.n, self.params.k
        if self.variant is Branch.STAR:
            p_len, p_sum, q_len, q_sum = k, n, k + 1, n - k - 1
        else:
            p_len, p_sum, q_len, q_sum = k + 1, n, k, n - k
        if any(x < 0 for x in self.p) or any(x < 0 for x in self.q):
            raise BadProfileError(f"profile entries must be nonnegative: p={self.p}, q={self.q}")
        if len(self.p) != p_len or sum(self.p) != p_sum:
            raise BadProfileError(
                f"{self.variant.value} profile needs {p_len} p-entries summing to {p_sum}, "
                f"got p={self.p}"
            )
        if len(self.q) != q_len or sum(self.q) != q_sum:
            raise BadProfileError(
                f"{self.variant.value} profile needs {q_len} q-entries summing to {q_sum}, "
                f"got q={self.q}"
            )


def word_to_profile(word: Word) -> PQProfile:
    """Read the p/q run lengths off ``word``, trimmed to its variant.

    Splitting on U leaves the k+1 groups of non-U letters; stripping Us and
    splitting on R leaves the k+1 runs of Ds, the first of which is shortened
    by one to form the leading q entry.
    """
    u_groups = word.letters.split("U")
    p = tuple(len(group) for group in u_groups)
    d_runs = word.letters.replace("U", "").split("R")
    q = (len(d_runs[0]) - 1,) + tuple(len(run) for run in d_runs[1:])
    if classify_word(word) is Branch.STAR:
        return PQProfile(Branch.STAR, p[1:], q, word.params)
    return PQProfile(Branch.ZERO, p, q[1:], word.params)


def profile_to_word(profile: PQProfile) -> Word:
    """Rebuild the unique word with the given profile; inverse of word_to_profile."""
    k = profile.params.k
    if profile.variant is Branch.STAR:
        non_u = "D" * (profile.q[0] + 1) + "".join("R" + "D" * runs for runs in profile.q[1:])
        p_full = (0, *profile.p)
    else:
        non_u = "".join("R" + "D" * runs for runs in profile.q)
        p_full = profile.p
    pieces = []
    pos = 0
    for i, run in enumerate(p_full):
        pieces.append(non_u[pos:pos + run])
        pos += run
        if i < k:
            pieces.append("U")
    return Word("".join(pieces), profile.params)
