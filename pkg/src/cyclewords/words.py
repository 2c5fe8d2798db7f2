"""Words over {R, U, D} with fixed letter multiplicities, and their star/zero split."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    BadAlphabetError,
    BadCountsError,
    BadParamsError,
    EmptyWordError,
    LeadingDError,
)

ALPHABET = "RUD"


@dataclass(frozen=True)
class CycleParams:
    """Problem size: words carry k Rs, k Us and n-k Ds; the cycle has 2n vertices.

    Subgraphs on the other side of the correspondence have exactly n edges
    split into k connected components.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise BadParamsError(f"n and k must be integers, got n={self.n!r}, k={self.k!r}")
        if self.n < 1 or not 1 <= self.k <= self.n:
            raise BadParamsError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def cycle_length(self) -> int:
        return 2 * self.n

    @property
    def word_length(self) -> int:
        return self.n + self.k


class Branch(Enum):
    """The two-way split used on both sides of the correspondence.

    A word is STAR when some D has no R in front of it, i.e. its first non-U
    letter is a D (such a word necessarily starts with U).  A subgraph is STAR
    when none of its components touches vertex 0.  Everything else is ZERO.
    """

    STAR = "star"
    ZERO = "zero"


# The same split names both word classes and subgraph classes.
WordClass = Branch
SubgraphClass = Branch


@dataclass(frozen=True)
class Word:
    """A validated letter sequence; construction enforces all word invariants."""

    letters: str
    params: CycleParams

    def __post_init__(self) -> None:
        text, params = self.letters, self.params
        if text == "":
            raise EmptyWordError("empty word")
        for i, ch in enumerate(text):
            if ch not in ALPHABET:
                raise BadAlphabetError(f"letter {ch!r} at position {i} is not one of R, U, D")
        counts = {ch: text.count(ch) for ch in ALPHABET}
        expected = {"R": params.k, "U": params.k, "D": params.n - params.k}
        if counts != expected:
            raise BadCountsError(
                f"expected {expected['R']} Rs, {expected['U']} Us, {expected['D']} Ds; "
                f"got {counts['R']} Rs, {counts['U']} Us, {counts['D']} Ds"
            )
        if text[0] == "D":
            raise LeadingDError("first letter must not be D")

    def __str__(self) -> str:
        return self.letters


def parse_word(text: str, params: CycleParams) -> Word:
    """Validate ``text`` against ``params`` and wrap it as a :class:`Word`.

    Raises :class:`EmptyWordError`, :class:`BadAlphabetError`,
    :class:`BadCountsError` or :class:`LeadingDError`.  Only uppercase
    R/U/D are accepted; whitespace is not tolerated.
    """
    return Word(text, params)


def classify_word(word: Word) -> Branch:
    """STAR when the first non-U letter is a D, ZERO otherwise (incl. D-less words)."""
    first_non_u = next(ch for ch in word.letters if ch != "U")
    return Branch.STAR if first_non_u == "D" else Branch.ZERO
