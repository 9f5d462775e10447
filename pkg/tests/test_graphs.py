from __future__ import annotations

import dataclasses
import json

import pytest

from helpers import load_fixture, make_graph
from prymcheck.errors import GraphFormatError, InvalidGraphError
from prymcheck.graphs import (
    OrientedEdge,
    arithmetic_genus,
    auto_orient,
    bold_subgraph,
    canonical_json,
    parse_graph,
    require_valid,
    to_document,
    validate,
)

ALL_FIXTURES = ["fs2", "fs4", "boldbanana", "square", "fs4tail"]


def violation_codes(g):
    return {code for code, _ in validate(g).violations}


class TestParse:
    def test_fixture_roundtrip(self):
        for name in ALL_FIXTURES:
            g = load_fixture(name)
            doc = to_document(g)
            again = parse_graph(json.dumps(doc))
            assert again == g

    def test_stored_order_preserved(self, fs4):
        assert [e.id for e in fs4.edges] == ["a1", "a2", "b1", "b2"]
        assert [v.id for v in fs4.vertices] == ["v1", "v2"]

    def test_genus_parsed(self, fs2, boldbanana):
        assert fs2.vertex("v1").genus == 2
        assert boldbanana.vertex("v1").genus is None

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[1, 2]",
            '{"vertices": [], "edges": []}',
            '{"vertices": [{"id": "v"}, {"id": "v"}], "edges": [], "involution": {"vertices": {"v": "v"}, "edges": {}}}',
            '{"vertices": [{"id": "v"}], "edges": [{"id": "e", "from": "v", "to": "w"}], "involution": {"vertices": {"v": "v"}, "edges": {"e": "e"}}}',
            '{"vertices": [{"id": "v"}], "edges": [], "involution": {"vertices": {}, "edges": {}}}',
            '{"vertices": [{"id": "v"}], "edges": [], "involution": {"vertices": {"v": "v", "x": "x"}, "edges": {}}}',
            '{"vertices": [{"id": "v", "genus": -1}], "edges": [], "involution": {"vertices": {"v": "v"}, "edges": {}}}',
            '{"vertices": [{"id": ""}], "edges": [], "involution": {"vertices": {}, "edges": {}}}',
            '{"vertices": [{"id": "v"}], "edges": [{"id": "e", "from": "v", "to": "v"}, {"id": "e", "from": "v", "to": "v"}], "involution": {"vertices": {"v": "v"}, "edges": {"e": "e"}}}',
        ],
    )
    def test_bad_documents(self, text):
        with pytest.raises(GraphFormatError):
            parse_graph(text)


class TestValidate:
    def test_fixtures_valid(self):
        for name in ALL_FIXTURES:
            report = validate(load_fixture(name))
            assert report.ok, (name, report.violations)

    def test_counts_fs2(self, fs2):
        report = validate(fs2)
        assert report.bold_vertices == {"v1", "v2"}
        assert report.bold_edges == frozenset()
        assert (report.n_e, report.c_e) == (1, 0)

    def test_counts_square(self, square):
        report = validate(square)
        assert report.bold_vertices == frozenset()
        assert (report.n_e, report.c_e) == (2, 2)

    def test_counts_fs4tail(self, fs4tail):
        report = validate(fs4tail)
        assert report.bold_edges == {"c"}
        assert (report.n_e, report.c_e) == (2, 0)

    def test_type_2_node_rejected(self):
        g = make_graph(
            ["y", "z"],
            [("f", "y", "z")],
            vswaps=[("y", "z")],
        )
        assert violation_codes(g) == {"type-2-node"}
        with pytest.raises(InvalidGraphError) as err:
            require_valid(g)
        assert "type-2-node" in str(err.value)

    def test_non_involutive_vertex_map(self):
        g = make_graph(["v1", "v2", "v3"], [("e", "v1", "v2"), ("f", "v2", "v3"), ("h", "v3", "v1")])
        g = dataclasses.replace(
            g,
            involution=dataclasses.replace(
                g.involution, vertices={"v1": "v2", "v2": "v3", "v3": "v1"}
            ),
        )
        assert "vertex-map-not-involution" in violation_codes(g)

    def test_incidence_mismatch(self):
        # i swaps e1 (v1-v2) with e2 (v2-v3): endpoints do not match the fixed vertices
        g = make_graph(
            ["v1", "v2", "v3"],
            [("e1", "v1", "v2"), ("e2", "v2", "v3")],
            eswaps=[("e1", "e2")],
        )
        assert "edge-map-incidence" in violation_codes(g)

    def test_disconnected(self):
        g = make_graph(["v1", "v2"], [])
        assert violation_codes(g) == {"not-connected"}

    def test_empty(self):
        g = make_graph([], [])
        assert "no-vertices" in violation_codes(g)

    def test_oriented_flag_checked(self, fs2):
        # claim oriented=True while e2 is stored against the involution image
        bad = dataclasses.replace(
            fs2,
            edges=(fs2.edge("e1"), OrientedEdge("e2", "v2", "v1")),
            oriented=True,
        )
        assert "orientation-incompatible" in violation_codes(bad)
        # the same graph without the flag is valid (normalization not claimed)
        assert validate(dataclasses.replace(bad, oriented=False)).ok


class TestAutoOrient:
    def test_reorients_partner(self, fs2):
        variant = dataclasses.replace(
            fs2, edges=(fs2.edge("e1"), OrientedEdge("e2", "v2", "v1"))
        )
        normalized = auto_orient(variant)
        assert normalized.edge("e2") == OrientedEdge("e2", "v1", "v2")
        assert normalized.oriented
        assert validate(normalized).ok

    def test_idempotent(self):
        for name in ALL_FIXTURES:
            g = auto_orient(load_fixture(name))
            assert auto_orient(g) == g

    def test_square_already_compatible(self, square):
        normalized = auto_orient(square)
        assert normalized.edges == square.edges

    def test_commutes_with_monotone_relabel(self, fs4):
        def relabel(g, prefix):
            vmap = {v.id: prefix + v.id for v in g.vertices}
            emap = {e.id: prefix + e.id for e in g.edges}
            renamed = make_graph(
                [vmap[v.id] for v in g.vertices],
                [(emap[e.id], vmap[e.tail], vmap[e.head]) for e in g.edges],
                vswaps=[
                    (vmap[a], vmap[b])
                    for a, b in [(x, g.vmap(x)) for x in g.involution.vertices]
                    if a != b and a < b
                ],
                eswaps=[
                    (emap[a], emap[b])
                    for a, b in [(x, g.emap(x)) for x in g.involution.edges]
                    if a != b and a < b
                ],
            )
            return dataclasses.replace(renamed, oriented=g.oriented)

        variant = dataclasses.replace(
            fs4,
            edges=tuple(
                OrientedEdge(e.id, e.head, e.tail) if e.id == "b2" else e
                for e in fs4.edges
            ),
        )
        assert relabel(auto_orient(variant), "x") == auto_orient(relabel(variant, "x"))


class TestBoldSubgraph:
    def test_fs4tail_components(self, fs4tail):
        bold = bold_subgraph(fs4tail)
        assert bold.vertices == {"v1", "v2", "v3"}
        assert bold.edges == {"c"}
        assert [c.vertices for c in bold.components] == [{"v1"}, {"v2", "v3"}]
        assert [c.edges for c in bold.components] == [frozenset(), {"c"}]

    def test_square_empty(self, square):
        bold = bold_subgraph(square)
        assert bold.vertices == frozenset()
        assert bold.components == ()

    def test_boldbanana_single_component(self, boldbanana):
        bold = bold_subgraph(boldbanana)
        assert [c.vertices for c in bold.components] == [{"v1", "v2"}]
        assert [c.edges for c in bold.components] == [{"b"}]


class TestArithmeticGenus:
    def test_labeled_fixtures(self, fs2, fs4):
        assert arithmetic_genus(fs4) == 1 + 1 + 4 - 2 + 1
        assert arithmetic_genus(fs2) == 2 + 2 + 2 - 2 + 1

    def test_square_all_zero(self, square):
        labeled = dataclasses.replace(
            square,
            vertices=tuple(dataclasses.replace(v, genus=0) for v in square.vertices),
        )
        assert arithmetic_genus(labeled) == 1

    def test_missing_labels(self, boldbanana):
        with pytest.raises(ValueError, match="genus labels missing"):
            arithmetic_genus(boldbanana)


class TestSerialization:
    def test_canonical_json_deterministic(self):
        for name in ALL_FIXTURES:
            g = load_fixture(name)
            text = canonical_json(g)
            assert text == canonical_json(parse_graph(json.dumps(to_document(g))))
            assert "\n" not in text

    def test_orbits(self, fs4tail, square):
        assert fs4tail.edge_orbits() == (("a1", "a2"), ("b1", "b2"), ("c", "c"))
        assert square.vertex_orbits() == (("u1", "w1"), ("u2", "w2"))
