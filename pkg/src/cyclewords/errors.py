"""Exception types shared across the package."""


class CycleWordsError(ValueError):
    """Base class for every validation or consistency error raised here."""


class BadParamsError(CycleWordsError):
    """Cycle parameters out of range (need integers with 1 <= k <= n)."""


class WordError(CycleWordsError):
    """A letter sequence is not a valid word for its parameters."""


class EmptyWordError(WordError):
    """Zero-length input."""


class BadAlphabetError(WordError):
    """A character outside {R, U, D}."""


class BadCountsError(WordError):
    """Letter multiplicities do not match k Rs, k Us, n-k Ds."""


class LeadingDError(WordError):
    """The first letter is D."""


class BadProfileError(CycleWordsError):
    """p/q sequences violate their variant's length, sign or sum constraints."""


class SubgraphError(CycleWordsError):
    """An edge/vertex selection does not form a valid subgraph."""


class OverlapError(SubgraphError):
    """Components share a vertex, e.g. an isolated vertex sits on a chosen edge."""


class WrongEdgeCountError(SubgraphError):
    """Total number of edges differs from n."""


class WrongComponentCountError(SubgraphError):
    """Number of connected components differs from k."""


class FullCycleError(SubgraphError):
    """Every cycle edge chosen; the result would be the cycle, not a union of paths."""


class DocumentError(CycleWordsError):
    """A subgraph document fails schema validation."""


class CountMismatchError(CycleWordsError):
    """Brute-force counts disagree with the closed forms; signals a bug.

    Carries the offending table so callers can still display it.
    """

    def __init__(self, message: str, table=None):
        super().__init__(message)
        self.table = table
