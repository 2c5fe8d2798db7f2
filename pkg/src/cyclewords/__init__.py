"""Explicit bijection between R/U/D words and n-edge, k-component cycle subgraphs.

Words with k Rs, k Us and n-k Ds (first letter not D) correspond one-to-one
with subgraphs of the labelled 2n-cycle that have n edges and k connected
components.  This package implements the correspondence in both directions,
counts both sides exactly, and verifies bijectivity exhaustively on small
parameters.
"""

from .bijection import (
    star_profile_to_subgraph,
    subgraph_to_profile,
    subgraph_to_word,
    word_to_subgraph,
    zero_profile_to_subgraph,
)
from .counting import CountTable, binomial, count_table, count_w_star, count_w_zero
from .enumeration import enumerate_subgraphs, enumerate_words
from .errors import (
    BadAlphabetError,
    BadCountsError,
    BadParamsError,
    BadProfileError,
    CountMismatchError,
    CycleWordsError,
    DocumentError,
    EmptyWordError,
    FullCycleError,
    LeadingDError,
    OverlapError,
    SubgraphError,
    WordError,
    WrongComponentCountError,
    WrongEdgeCountError,
)
from .profiles import PQProfile, profile_to_word, word_to_profile
from .subgraphs import (
    Arc,
    CycleSubgraph,
    arc_contains,
    arc_edge_ids,
    arc_vertices,
    classify_subgraph,
    expand_arc,
    maximal_arcs,
    normalize_edges,
)
from .verification import VerificationReport, verify_bijection, verify_grid
from .words import (
    ALPHABET,
    Branch,
    CycleParams,
    SubgraphClass,
    Word,
    WordClass,
    classify_word,
    parse_word,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "Arc",
    "BadAlphabetError",
    "BadCountsError",
    "BadParamsError",
    "BadProfileError",
    "Branch",
    "CountMismatchError",
    "CountTable",
    "CycleParams",
    "CycleSubgraph",
    "CycleWordsError",
    "DocumentError",
    "EmptyWordError",
    "FullCycleError",
    "LeadingDError",
    "OverlapError",
    "PQProfile",
    "SubgraphClass",
    "SubgraphError",
    "VerificationReport",
    "Word",
    "WordClass",
    "WordError",
    "WrongComponentCountError",
    "WrongEdgeCountError",
    "arc_contains",
    "arc_edge_ids",
    "arc_vertices",
    "binomial",
    "classify_subgraph",
    "classify_word",
    "count_table",
    "count_w_star",
    "count_w_zero",
    "enumerate_subgraphs",
    "enumerate_words",
    "expand_arc",
    "maximal_arcs",
    "normalize_edges",
    "parse_word",
    "profile_to_word",
    "star_profile_to_subgraph",
    "subgraph_to_profile",
    "subgraph_to_word",
    "verify_bijection",
    "verify_grid",
    "word_to_profile",
    "word_to_subgraph",
    "zero_profile_to_subgraph",
]
