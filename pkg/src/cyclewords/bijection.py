"""Forward and inverse maps between words, profiles and cycle subgraphs.

Both directions go through the p/q profile: the p entries become component
edge counts, the q entries become the gaps of absent edges between
consecutive components, and the variant decides whether vertex 0 falls
inside a component (zero) or inside a gap (star).
"""

from __future__ import annotations

from .errors import BadProfileError
from .profiles import PQProfile, profile_to_word, word_to_profile
from .subgraphs import Arc, CycleSubgraph, arc_contains, classify_subgraph
from .words import Branch, Word


def star_profile_to_subgraph(profile: PQProfile) -> CycleSubgraph:
    """Lay out a star profile's components around the cycle, avoiding vertex 0.

    The first component starts q[0] + 1 steps past vertex 0; the m-th
    component carries p[m] edges and is followed by a gap of q[m] + 1 absent
    edges, the final gap closing the cycle back at vertex 0.  Every vertex
    used lies strictly between 0 and 2n, so the image avoids vertex 0.
    """
    if profile.variant is not Branch.STAR:
        raise BadProfileError(f"star placement needs a star profile, got {profile.variant.value}")
    arcs = []
    position = 1 + profile.q[0]
    for m, edges in enumerate(profile.p):
        arcs.append(Arc(position, edges))
        position += edges + profile.q[m + 1] + 1
    # components and gaps alternate exactly once around the cycle
    assert position == profile.params.cycle_length
    return CycleSubgraph(tuple(arcs), profile.params)


def zero_profile_to_subgraph(profile: PQProfile) -> CycleSubgraph:
    """Lay out a zero profile's components; one of them covers vertex 0.

    The covering component runs from p[-1] steps before vertex 0 to p[0]
    steps past it, so it has p[-1] + p[0] edges.  The remaining components
    follow in cycle order, each behind a gap of one more than the matching
    q entry.
    """
    if profile.variant is not Branch.ZERO:
        raise BadProfileError(f"zero placement needs a zero profile, got {profile.variant.value}")
    cycle_len = profile.params.cycle_length
    p, q = profile.p, profile.q
    wrap = Arc((cycle_len - p[-1]) % cycle_len, p[-1] + p[0])
    arcs = [wrap]
    position = 1 + p[0] + q[0]
    for m in range(1, profile.params.k):
        arcs.append(Arc(position, p[m]))
        position += p[m] + q[m] + 1
    assert position % cycle_len == wrap.start  # the walk ends where the wrap component begins
    return CycleSubgraph(tuple(arcs), profile.params)


def subgraph_to_profile(graph: CycleSubgraph) -> PQProfile:
    """Read the p/q profile back off a subgraph's layout; inverts both placements.

    Star side: components are ordered walking up from vertex 0, their edge
    counts give p and the gaps (minus one) give q.  Zero side: the component
    through vertex 0 anchors the ordering and splits into the first and last
    p entries; the rest follow around the cycle.
    """
    params = graph.params
    cycle_len = params.cycle_length
    if classify_subgraph(graph) is Branch.STAR:
        arcs = graph.arcs  # canonical order; none wraps, all starts >= 1
        p = tuple(a.edge_count for a in arcs)
        gap_ends = [0] + [a.start + a.edge_count for a in arcs]
        gap_starts = [a.start for a in arcs] + [cycle_len]
        q = tuple(s - e - 1 for e, s in zip(gap_ends, gap_starts))
        return PQProfile(Branch.STAR, p, q, params)
    wrap = next(a for a in graph.arcs if arc_contains(a, 0, params))
    behind = (-wrap.start) % cycle_len  # edges from the wrap start up to vertex 0
    ahead = wrap.edge_count - behind  # edges from vertex 0 on to the wrap end
    rest = [a for a in graph.arcs if a is not wrap]  # canonical order, all beyond `ahead`
    p = (ahead, *(a.edge_count for a in rest), behind)
    gap_ends = [ahead] + [a.start + a.edge_count for a in rest]
    gap_starts = [a.start for a in rest] + [cycle_len - behind]
    q = tuple(s - e - 1 for e, s in zip(gap_ends, gap_starts))
    return PQProfile(Branch.ZERO, p, q, params)


def word_to_subgraph(word: Word) -> CycleSubgraph:
    """Map a word to its subgraph, dispatching on the word's class."""
    profile = word_to_profile(word)
    if profile.variant is Branch.STAR:
        return star_profile_to_subgraph(profile)
    return zero_profile_to_subgraph(profile)


def subgraph_to_word(graph: CycleSubgraph) -> Word:
    """Recover the unique word mapping to ``graph``; exact inverse of word_to_subgraph."""
    return profile_to_word(subgraph_to_profile(graph))
