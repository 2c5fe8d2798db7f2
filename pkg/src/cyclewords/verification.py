"""Exhaustive bijectivity checking for one parameter cell or a whole grid."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .bijection import subgraph_to_word, word_to_subgraph
from .enumeration import enumerate_subgraphs, enumerate_words
from .subgraphs import CycleSubgraph, classify_subgraph
from .words import CycleParams, Word, classify_word


@dataclass
class VerificationReport:
    """Outcome of checking one (n, k) cell exhaustively.

    ``counterexamples`` records the first offending word or subgraph for each
    failed check; it is empty exactly when the cell passed.
    """

    params: CycleParams
    words_enumerated: int = 0
    subgraphs_enumerated: int = 0
    forward_injective: bool = True
    image_equals_subgraphs: bool = True
    words_roundtrip: bool = True
    subgraphs_roundtrip: bool = True
    class_preserving: bool = True
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.forward_injective
            and self.image_equals_subgraphs
            and self.words_roundtrip
            and self.subgraphs_roundtrip
            and self.class_preserving
            and not self.counterexamples
        )

    def _fail(self, flag: str, counterexample: str) -> None:
        if getattr(self, flag):
            setattr(self, flag, False)
            self.counterexamples.append(counterexample)


def verify_bijection(params: CycleParams) -> VerificationReport:
    """Map every word forward and check bijectivity against the independent enumeration.

    Checks: forward images are valid and pairwise distinct; the image set
    equals the enumerated subgraph set; mapping back returns every word and
    every subgraph to itself; word class matches image class.  Failures are
    recorded on the report, never raised.  Intended for small n; the work
    grows combinatorially.
    """
    report = VerificationReport(params=params)
    words = list(enumerate_words(params))
    subgraphs = list(enumerate_subgraphs(params))
    report.words_enumerated = len(words)
    report.subgraphs_enumerated = len(subgraphs)

    images: dict[CycleSubgraph, Word] = {}
    for word in words:
        try:
            image = word_to_subgraph(word)
        except Exception as exc:  # totality failure counts against injectivity
            report._fail("forward_injective", f"word {word}: forward map raised {exc!r}")
            continue
        if image in images:
            report._fail(
                "forward_injective",
                f"words {images[image]} and {word} share the image {image}",
            )
        else:
            images[image] = word
        if classify_subgraph(image) is not classify_word(word):
            report._fail("class_preserving", f"word {word} changed class mapping to {image}")
        try:
            back = subgraph_to_word(image)
        except Exception as exc:
            back = None
            detail = f"word {word}: inverse raised {exc!r}"
        else:
            detail = f"word {word} came back as {back}"
        if back != word:
            report._fail("words_roundtrip", detail)

    expected = set(subgraphs)
    if set(images) != expected:
        missing = next((g for g in subgraphs if g not in images), None)
        if missing is not None:
            report._fail("image_equals_subgraphs", f"subgraph {missing} has no preimage")
        else:
            stray = next(g for g in images if g not in expected)
            report._fail("image_equals_subgraphs", f"image {stray} is not a valid subgraph here")

    for graph in subgraphs:
        try:
            again = word_to_subgraph(subgraph_to_word(graph))
        except Exception as exc:
            report._fail("subgraphs_roundtrip", f"subgraph {graph}: roundtrip raised {exc!r}")
            continue
        if again != graph:
            report._fail("subgraphs_roundtrip", f"subgraph {graph} came back as {again}")

    return report


def verify_grid(max_n: int) -> Iterator[VerificationReport]:
    """Reports for every cell 1 <= k <= n <= max_n, in row order."""
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            yield verify_bijection(CycleParams(n, k))
