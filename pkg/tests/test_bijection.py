import pytest

from cyclewords import (
    Arc,
    BadProfileError,
    Branch,
    CycleParams,
    CycleSubgraph,
    PQProfile,
    classify_subgraph,
    classify_word,
    enumerate_subgraphs,
    enumerate_words,
    parse_word,
    star_profile_to_subgraph,
    subgraph_to_profile,
    subgraph_to_word,
    word_to_profile,
    word_to_subgraph,
    zero_profile_to_subgraph,
)


def word(text, n, k):
    return parse_word(text, CycleParams(n, k))


def graph(arcs, n, k):
    return CycleSubgraph(tuple(arcs), CycleParams(n, k))


class TestStarPlacement:
    # expected arc layouts confirmed by the exhaustive image check further down
    @pytest.mark.parametrize(
        "p,q,n,k,arcs",
        [
            ((2,), (0, 0), 2, 1, [Arc(1, 2)]),
            ((1, 2), (0, 0, 0), 3, 2, [Arc(1, 1), Arc(3, 2)]),
            ((3,), (1, 0), 3, 1, [Arc(2, 3)]),
        ],
    )
    def test_frozen_examples(self, p, q, n, k, arcs):
        prof = PQProfile(Branch.STAR, p, q, CycleParams(n, k))
        assert star_profile_to_subgraph(prof) == graph(arcs, n, k)

    def test_rejects_zero_profile(self):
        prof = PQProfile(Branch.ZERO, (1, 1), (1,), CycleParams(2, 1))
        with pytest.raises(BadProfileError):
            star_profile_to_subgraph(prof)

    def test_images_avoid_vertex_zero(self, params_grid_small):
        for params in params_grid_small:
            for w in enumerate_words(params):
                prof = word_to_profile(w)
                if prof.variant is Branch.STAR:
                    image = star_profile_to_subgraph(prof)
                    assert 0 not in image.vertex_set()


class TestZeroPlacement:
    @pytest.mark.parametrize(
        "p,q,n,k,arcs",
        [
            ((1, 1, 1), (1, 0), 3, 2, [Arc(3, 1), Arc(5, 2)]),
            ((0, 0, 2), (0, 0), 2, 2, [Arc(1, 0), Arc(2, 2)]),
            ((0, 2, 0), (0, 0), 2, 2, [Arc(1, 2), Arc(0, 0)]),
            ((1, 1), (1,), 2, 1, [Arc(3, 2)]),
        ],
    )
    def test_frozen_examples(self, p, q, n, k, arcs):
        prof = PQProfile(Branch.ZERO, p, q, CycleParams(n, k))
        assert zero_profile_to_subgraph(prof) == graph(arcs, n, k)

    def test_rejects_star_profile(self):
        prof = PQProfile(Branch.STAR, (2,), (0, 0), CycleParams(2, 1))
        with pytest.raises(BadProfileError):
            zero_profile_to_subgraph(prof)

    def test_images_cover_vertex_zero(self, params_grid_small):
        for params in params_grid_small:
            for w in enumerate_words(params):
                prof = word_to_profile(w)
                if prof.variant is Branch.ZERO:
                    image = zero_profile_to_subgraph(prof)
                    assert 0 in image.vertex_set()


class TestWordToSubgraph:
    @pytest.mark.parametrize(
        "text,n,k,arcs",
        [
            ("UDR", 2, 1, [Arc(1, 2)]),
            ("RUD", 2, 1, [Arc(3, 2)]),
            ("URD", 2, 1, [Arc(2, 2)]),
            ("RDU", 2, 1, [Arc(0, 2)]),
            ("RUDUR", 3, 2, [Arc(3, 1), Arc(5, 2)]),
        ],
    )
    def test_frozen_examples(self, text, n, k, arcs):
        assert word_to_subgraph(word(text, n, k)) == graph(arcs, n, k)

    def test_class_preserved_everywhere(self, params_grid_medium):
        for params in params_grid_medium:
            for w in enumerate_words(params):
                assert classify_subgraph(word_to_subgraph(w)) is classify_word(w)


class TestSubgraphToProfile:
    @pytest.mark.parametrize(
        "arcs,n,k,variant,p,q",
        [
            ([Arc(1, 2)], 2, 1, Branch.STAR, (2,), (0, 0)),
            ([Arc(3, 1), Arc(5, 2)], 3, 2, Branch.ZERO, (1, 1, 1), (1, 0)),
            ([Arc(1, 0), Arc(2, 2)], 2, 2, Branch.ZERO, (0, 0, 2), (0, 0)),
        ],
    )
    def test_frozen_examples(self, arcs, n, k, variant, p, q):
        prof = subgraph_to_profile(graph(arcs, n, k))
        assert (prof.variant, prof.p, prof.q) == (variant, p, q)


class TestSubgraphToWord:
    @pytest.mark.parametrize(
        "arcs,n,k,expected",
        [
            ([Arc(1, 2)], 2, 1, "UDR"),
            ([Arc(0, 2)], 2, 1, "RDU"),
            ([Arc(1, 1), Arc(3, 2)], 3, 2, "UDURR"),
        ],
    )
    def test_frozen_examples(self, arcs, n, k, expected):
        assert subgraph_to_word(graph(arcs, n, k)).letters == expected


class TestRoundtrips:
    def test_words_roundtrip_exhaustively(self, params_grid_medium):
        for params in params_grid_medium:
            for w in enumerate_words(params):
                assert subgraph_to_word(word_to_subgraph(w)) == w

    def test_subgraphs_roundtrip_exhaustively(self, params_grid_medium):
        for params in params_grid_medium:
            for g in enumerate_subgraphs(params):
                assert word_to_subgraph(subgraph_to_word(g)) == g


class TestPlacementStructure:
    def test_star_edges_and_gaps_match_profile(self, params_grid_small):
        # m-th component has p[m] edges; the gap after it spans q[m+1] + 1
        # absent edges, with q[0] + 1 edges before the first component
        for params in params_grid_small:
            cycle_len = params.cycle_length
            for w in enumerate_words(params):
                prof = word_to_profile(w)
                if prof.variant is not Branch.STAR:
                    continue
                arcs = star_profile_to_subgraph(prof).arcs
                assert tuple(a.edge_count for a in arcs) == prof.p
                boundary = [0] + [a.start + a.edge_count for a in arcs]
                nexts = [a.start for a in arcs] + [cycle_len]
                gaps = tuple(s - e for e, s in zip(boundary, nexts))
                assert gaps == tuple(x + 1 for x in prof.q)

    def test_zero_wrap_arc_has_combined_edges(self, params_grid_small):
        for params in params_grid_small:
            cycle_len = params.cycle_length
            for w in enumerate_words(params):
                prof = word_to_profile(w)
                if prof.variant is not Branch.ZERO:
                    continue
                image = zero_profile_to_subgraph(prof)
                wrap = next(
                    a for a in image.arcs
                    if (0 - a.start) % cycle_len <= a.edge_count
                )
                assert wrap.edge_count == prof.p[-1] + prof.p[0]
                assert wrap.start == (cycle_len - prof.p[-1]) % cycle_len
