from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from highconn.formats import (
    GraphFormatError,
    dumps,
    from_json_obj,
    graph_hash,
    loads,
    parse_edge_list,
    read_graph,
    to_dot,
    to_edge_list,
    write_graph,
)
from highconn.graph import Graph, build_basic


def test_json_example_is_triangle():
    g = loads('{"n":3,"simple":true,"edges":[[0,1],[1,2],[0,2]]}')
    assert g == build_basic("complete", [3])


def test_json_rejects_out_of_range_and_duplicates():
    with pytest.raises(GraphFormatError):
        loads('{"n":3,"simple":true,"edges":[[0,5]]}')
    with pytest.raises(GraphFormatError):
        loads('{"n":3,"simple":true,"edges":[[0,1],[1,0]]}')
    with pytest.raises(GraphFormatError):
        loads('{"n":3}')
    with pytest.raises(GraphFormatError):
        loads("not json")


def test_serialize_parse_is_canonical():
    raw = {"n": 4, "simple": False, "edges": [[3, 1], [0, 2], [1, 3]]}
    g = from_json_obj(raw)
    assert json.loads(dumps(g))["edges"] == [[0, 2], [1, 3], [1, 3]]
    assert loads(dumps(g)) == g


def test_edge_list_round_trip_and_errors():
    g = Graph(4, ((0, 1), (0, 1), (2, 3)), simple=False)
    text = to_edge_list(g)
    assert text.splitlines()[0] == "4 3 0"
    assert parse_edge_list(text) == g
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 2 1\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 x 1\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 1 1\n0 3\n")


def test_graph_hash_ignores_input_order():
    a = Graph(3, ((0, 1), (1, 2)))
    b = Graph(3, ((2, 1), (1, 0)))
    assert graph_hash(a) == graph_hash(b)
    assert graph_hash(a) != graph_hash(Graph(3, ((0, 1),)))
    assert graph_hash(a).startswith("sha256:")


def test_read_write_both_formats(tmp_path):
    g = build_basic("cycle", [5])
    for name in ("g.json", "g.txt"):
        write_graph(g, tmp_path / name)
        assert read_graph(tmp_path / name) == g


def test_dot_export():
    dot = to_dot(build_basic("complete", [3]))
    assert dot.startswith("graph G {") and dot.count("--") == 3


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
                         max_size=12))))
def test_round_trip_property(data):
    n, edges = data
    g = Graph(n, tuple(edges), simple=False)
    assert loads(dumps(g)) == g
    assert parse_edge_list(to_edge_list(g)) == g
