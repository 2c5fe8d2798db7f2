import json
import re

import pytest

from cyclewords import (
    Arc,
    CycleParams,
    CycleSubgraph,
    DocumentError,
    WrongComponentCountError,
    enumerate_subgraphs,
)
from cyclewords.formats import (
    SubgraphDocument,
    document_from_subgraph,
    document_json,
    document_to_subgraph,
    parse_document,
    render_ascii,
    render_dot,
)


def graph(arcs, n, k):
    return CycleSubgraph(tuple(arcs), CycleParams(n, k))


class TestDocumentJson:
    def test_canonical_serialization(self):
        doc = document_from_subgraph(graph([Arc(2, 2), Arc(1, 0)], 2, 2))
        assert document_json(doc) == '{"n":2,"edges":[2,3],"isolated":[1]}'

    def test_key_order_and_sorting(self):
        doc = SubgraphDocument(n=3, edges=(4, 1, 3), isolated=(5,))
        text = document_json(doc)
        assert text == '{"n":3,"edges":[1,3,4],"isolated":[5]}'
        assert list(json.loads(text)) == ["n", "edges", "isolated"]


class TestParseDocument:
    def test_accepts_canonical_form(self):
        doc = parse_document('{"n":2,"edges":[1,2],"isolated":[]}')
        assert doc == SubgraphDocument(n=2, edges=(1, 2), isolated=())

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[1,2,3]",
            '{"n":2,"edges":[1,2]}',
            '{"n":2,"edges":[1,2],"isolated":[],"extra":0}',
            '{"n":true,"edges":[],"isolated":[]}',
            '{"n":0,"edges":[],"isolated":[]}',
            '{"n":2,"edges":"12","isolated":[]}',
            '{"n":2,"edges":[1,"2"],"isolated":[]}',
            '{"n":2,"edges":[1,4],"isolated":[]}',
            '{"n":2,"edges":[1,1],"isolated":[]}',
            '{"n":2,"edges":[1,2],"isolated":[9]}',
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(DocumentError):
            parse_document(text)


class TestDocumentRoundtrip:
    def test_component_count_mismatch(self):
        doc = parse_document('{"n":2,"edges":[1,2],"isolated":[]}')
        with pytest.raises(WrongComponentCountError):
            document_to_subgraph(doc, 2)

    def test_lossless_for_every_subgraph(self, params_grid_small):
        for params in params_grid_small:
            for g in enumerate_subgraphs(params):
                doc = document_from_subgraph(g)
                assert document_to_subgraph(doc, params.k) == g
                assert parse_document(document_json(doc)) == doc


class TestRenderAscii:
    def test_single_arc(self):
        assert render_ascii(graph([Arc(1, 2)], 2, 1)) == "arc 1..3 (2 edges)"

    def test_arc_plus_isolated(self):
        out = render_ascii(graph([Arc(2, 2), Arc(1, 0)], 2, 2))
        assert out == "isolated 1\narc 2..0 (2 edges)"

    def test_wrapping_arc(self):
        assert render_ascii(graph([Arc(3, 2)], 2, 1)) == "arc 3..1 (2 edges)"


class TestRenderDot:
    def test_statement_counts(self):
        out = render_dot(graph([Arc(1, 1), Arc(3, 2)], 3, 2))
        node_statements = re.findall(r"^\s*v\d+( \[[^\]]*\])?;$", out, flags=re.M)
        edge_statements = re.findall(r"^\s*v\d+ -- v\d+ \[[^\]]*\];$", out, flags=re.M)
        assert len(node_statements) == 6
        assert len(edge_statements) == 6

    def test_styles_follow_membership(self):
        out = render_dot(graph([Arc(1, 2)], 2, 1))
        assert "v1 -- v2 [style=solid];" in out
        assert "v2 -- v3 [style=solid];" in out
        assert "v3 -- v0 [style=dotted];" in out
        assert "v0 -- v1 [style=dotted];" in out
        assert "v0;" in out  # vertex 0 unused, not filled
        assert "v1 [style=filled];" in out

    def test_is_an_undirected_graph(self):
        out = render_dot(graph([Arc(0, 1)], 1, 1))
        assert out.startswith("graph ")
        assert "--" in out and "->" not in out
