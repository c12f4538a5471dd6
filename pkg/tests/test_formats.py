"""Parsing, serialization, and round-trip guarantees."""

from __future__ import annotations

import json
import random

import pytest

from hypersimp.errors import ParseError, ValidationError
from hypersimp.formats import (
    parse_hypergraph,
    parse_result,
    serialize_hypergraph,
    serialize_result,
)
from hypersimp.graphs import SingletonMode, WeightScheme
from hypersimp.hypergraph import hypergraph
from hypersimp.pipeline import Side, SimplificationParams, simplify

from conftest import random_hypergraph


class TestParseJson:
    def test_fig4_document(self):
        doc = {
            "vertices": [{"id": f"v{i}", "label": f"v{i}"} for i in range(1, 6)],
            "hyperedges": [
                {"id": "e1", "label": "e1", "members": ["v1", "v2", "v3"]},
                {"id": "e2", "label": "e2", "members": ["v2", "v3"]},
                {"id": "e3", "label": "e3", "members": ["v3", "v4", "v5"]},
            ],
        }
        h = parse_hypergraph(json.dumps(doc).encode(), "json")
        assert h.vertex_count == 5
        assert h.edge_members[0] == frozenset({0, 1, 2})

    def test_empty_lists(self):
        h = parse_hypergraph(b'{"vertices": [], "hyperedges": []}', "json")
        assert h.vertex_count == 0 and h.edge_count == 0

    def test_malformed_json_reports_position(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_hypergraph(b"{broken", "json")

    def test_dangling_member_lists_id(self):
        doc = {
            "vertices": [{"id": 1, "label": "a"}],
            "hyperedges": [{"id": 1, "label": "e", "members": [1, "v9"]}],
        }
        with pytest.raises(ValidationError, match="v9"):
            parse_hypergraph(json.dumps(doc).encode(), "json")

    def test_duplicate_vertex_id_rejected(self):
        doc = {
            "vertices": [{"id": 1, "label": "a"}, {"id": 1, "label": "b"}],
            "hyperedges": [],
        }
        with pytest.raises(ValidationError, match="duplicate"):
            parse_hypergraph(json.dumps(doc).encode(), "json")

    def test_order_stability(self):
        doc = {
            "vertices": [{"id": "x"}, {"id": "y"}],
            "hyperedges": [{"id": "e", "members": ["y", "x"]}],
        }
        data = json.dumps(doc).encode()
        assert parse_hypergraph(data, "json") == parse_hypergraph(data, "json")


class TestParseCsv:
    def test_southern_women_counts(self, southern_women_csv, southern_women):
        assert southern_women.vertex_count == 18
        assert southern_women.edge_count == 14
        incidences = sum(len(m) for m in southern_women.edge_members)
        assert incidences == 89
        # incidence count equals the CSV data row count
        rows = southern_women_csv.decode().strip().splitlines()[1:]
        assert len(rows) == 89

    def test_missing_vertex_field_rejected(self):
        with pytest.raises(ParseError, match="row 2"):
            parse_hypergraph(b"edge,vertex\ne1\n", "csv")

    def test_wrong_header_rejected(self):
        with pytest.raises(ParseError, match="header"):
            parse_hypergraph(b"a,b\ne1,v1\n", "csv")

    def test_duplicate_incidence_warns_and_dedupes(self):
        data = b"edge,vertex\ne1,v1\ne1,v1\n"
        with pytest.warns(UserWarning, match="duplicate"):
            h = parse_hypergraph(data, "csv")
        assert h.edge_members == (frozenset({0}),)

    def test_quoted_fields(self):
        data = b'edge,vertex\n"e,1",v1\n"e,1",v2\n'
        h = parse_hypergraph(data, "csv")
        assert h.edge_labels == ("e,1",)
        assert h.vertex_count == 2

    def test_unknown_format_rejected(self):
        with pytest.raises(ParseError, match="format"):
            parse_hypergraph(b"", "xml")


class TestHypergraphRoundTrip:
    def test_fig4(self, fig4):
        assert parse_hypergraph(serialize_hypergraph(fig4), "json") == fig4

    def test_random(self):
        rng = random.Random(89)
        for _ in range(25):
            h = random_hypergraph(rng)
            data = serialize_hypergraph(h)
            assert parse_hypergraph(data, "json") == h
            assert serialize_hypergraph(parse_hypergraph(data, "json")) == data


class TestResultRoundTrip:
    def test_epsilon_zero_simplified_equals_original(self, fig4):
        r = simplify(fig4, SimplificationParams(epsilon=0))
        doc = json.loads(serialize_result(r))
        assert doc["simplified_hypergraph"] == doc["original"]

    def test_fig4_round_trip_equality(self, fig4):
        r = simplify(fig4, SimplificationParams(side=Side.HYPEREDGE, epsilon=1.5))
        data = serialize_result(r)
        restored = parse_result(data)
        assert restored == r
        assert serialize_result(restored) == data

    def test_barcode_section_has_exact_three_halves(self, fig4):
        r = simplify(fig4, SimplificationParams(side=Side.HYPEREDGE))
        doc = json.loads(serialize_result(r))
        lengths = [
            bar["length"] for bar in doc["barcode"]["bars"] if "length" in bar
        ]
        assert 1.5 in lengths

    def test_round_trip_over_param_grid(self, fig4):
        for side in Side:
            for scheme in WeightScheme:
                for mode in SingletonMode:
                    p = SimplificationParams(
                        side=side,
                        scheme=scheme,
                        singleton_mode=mode,
                        epsilon=1.25,
                        pre_collapse_vertices=True,
                        pre_collapse_edges=True,
                    )
                    r = simplify(fig4, p)
                    assert parse_result(serialize_result(r)) == r

    def test_round_trip_with_expansion(self, fig4):
        base = simplify(fig4, SimplificationParams(epsilon=10))
        from hypersimp.pipeline import expand_bar

        r = expand_bar(base, 0)
        assert parse_result(serialize_result(r)) == r
