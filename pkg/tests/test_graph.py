import json

import pytest

from zetagraph import fixtures
from zetagraph.errors import GraphFormatError, GraphValidationError
from zetagraph.graph import (
    canonical_order,
    graph_stats,
    make_graph,
    parse_graph,
    reverse,
    serialize_graph,
    validate,
)


def test_reverse_is_involutive():
    assert reverse(("a", "b")) == ("b", "a")
    assert reverse(reverse(("a", "b"))) == ("a", "b")


def test_make_graph_stores_both_orientations():
    g = make_graph(["a", "b"], [("a", "b", 2.0, 3.0)])
    assert g.w(("a", "b")) == 2.0
    assert g.w(("b", "a")) == 3.0
    assert set(g.oriented_edges()) == {("a", "b"), ("b", "a")}
    assert list(g.neighbors("a")) == ["b"]


def test_all_catalogue_fixtures_are_valid():
    for name, g in fixtures.catalogue().items():
        assert validate(g).ok, name


@pytest.mark.parametrize(
    "vertices,edges,backtrack,code",
    [
        (["a", "a", "b"], [("a", "b", 1, 1)], (), "duplicate-vertex"),
        ([], [], (), "empty"),
        (["a", "b"], [("a", "a", 1, 1)], (), "loop"),
        (["a", "b"], [("a", "c", 1, 1)], (), "unknown-vertex"),
        (["a", "b"], [("a", "b", 1, 1), ("b", "a", 1, 1)], (), "duplicate-edge"),
        (["a", "b"], [("a", "b", -1, 1)], (), "nonpositive-weight"),
        (["a", "b"], [("a", "b", 0.0, 1)], (), "nonpositive-weight"),
        (["a", "b", "c"], [("a", "b", 1, 1)], (), "disconnected"),
    ],
)
def test_validation_codes(vertices, edges, backtrack, code):
    report = validate(make_graph(vertices, edges, backtrack))
    assert not report.ok
    assert code in report.codes()


def test_symmetric_backtrack_predicate():
    g = fixtures.backtrack_pair()
    assert g.has_symmetric_backtrack()
    g = fixtures.backtrack_single()
    assert not g.has_symmetric_backtrack()
    assert fixtures.triangle().has_symmetric_backtrack()  # vacuous on empty set


def test_canonical_order_ignores_input_permutation():
    g1 = make_graph(["c", "a", "b"], [("c", "a", 1, 2), ("a", "b", 3, 4)])
    g2 = make_graph(["a", "b", "c"], [("a", "b", 3, 4), ("c", "a", 1, 2)])
    assert canonical_order(g1) == canonical_order(g2)
    verts, edges = canonical_order(g1)
    assert verts == ["a", "b", "c"]
    assert edges == sorted(edges)


def test_stats_weighted_triangle():
    st = graph_stats(fixtures.weighted_triangle())
    assert st.vertex_count == 3
    assert st.edge_count == 3
    assert st.euler_number == 0
    assert st.total_weight == pytest.approx(1.95, abs=1e-12)
    assert st.valency_bound == 2
    assert st.girth_lower_bound == 3
    assert st.W_per_edge[frozenset(("x", "y"))] == pytest.approx(0.05)
    assert st.W_per_edge[frozenset(("y", "z"))] == pytest.approx(0.1)
    assert st.W_per_edge[frozenset(("x", "z"))] == pytest.approx(0.1)


def test_stats_tree_and_k4():
    st = graph_stats(fixtures.path3())
    assert st.euler_number == 1
    assert st.girth_lower_bound == 0  # acyclic
    st = graph_stats(fixtures.complete4())
    assert st.euler_number == -2
    assert st.valency_bound == 3
    assert st.girth_lower_bound == 3


def test_serialize_parse_round_trip():
    for name, g in fixtures.catalogue().items():
        back = parse_graph(serialize_graph(g))
        assert back == g, name


def test_parse_defaults_reverse_weight_and_flags():
    g = parse_graph('{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "wuv": 0.5}]}')
    assert g.w(("b", "a")) == 0.5
    assert not g.backtrack


def test_parse_reads_backtrack_flags():
    text = json.dumps(
        {
            "vertices": ["a", "b"],
            "edges": [{"u": "a", "v": "b", "wuv": 2.0, "wvu": 3.0, "bt_uv": True}],
        }
    )
    g = parse_graph(text)
    assert g.backtrack == frozenset({("a", "b")})


@pytest.mark.parametrize(
    "text",
    [
        "not json at all",
        "[1, 2]",
        '{"edges": []}',
        '{"vertices": ["a"], "edges": [{"u": "a"}]}',
        '{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "wuv": "heavy"}]}',
        '{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "wuv": true}]}',
        '{"vertices": ["a", "b"], "edges": [["a", "b", 1.0]]}',
    ],
)
def test_parse_rejects_malformed_documents(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_rejects_invalid_graphs_with_report():
    text = '{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "wuv": -1.0}]}'
    with pytest.raises(GraphValidationError) as err:
        parse_graph(text)
    assert "nonpositive-weight" in err.value.report.codes()


def test_graph_is_frozen():
    g = fixtures.triangle()
    assert g == fixtures.triangle()
    with pytest.raises(AttributeError):
        g.vertices = ()
