from __future__ import annotations

import random

import pytest

from highconn.connectivity import (
    edge_connectivity,
    find_separator,
    is_k_plus_1_connected,
    is_k_plus_1_edge_connected,
    stoer_wagner,
    vertex_connectivity,
)
from highconn.constructions import multigraph_counterexample
from highconn.graph import Graph, build_basic

from oracles import brute_kappa, brute_lambda, random_graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def _check_separation(g, sep, order):
    s, a, b = set(sep.separator), set(sep.side_a), set(sep.side_b)
    assert len(s) == order and a and b
    assert not (s & a or s & b or a & b) and s | a | b == set(range(g.n))
    assert not any(w in b for v in a for w in g.adjacency[v])


def _check_cut(g, cut, size):
    a, b = set(cut.side_a), set(cut.side_b)
    assert a and b and not a & b and a | b == set(range(g.n))
    crossing = sorted(e for e in g.edges if (e[0] in a) != (e[1] in a))
    assert crossing == sorted(cut.edges) and len(crossing) == size


def test_vertex_connectivity_examples():
    assert vertex_connectivity(build_basic("complete", [4])) == (3, None)
    value, sep = vertex_connectivity(build_basic("cycle", [5]))
    assert value == 2
    _check_separation(build_basic("cycle", [5]), sep, 2)
    p = petersen()
    value, sep = vertex_connectivity(p)
    assert value == 3 == brute_kappa(p)
    _check_separation(p, sep, 3)


def test_vertex_connectivity_disconnected_and_empty():
    g = Graph(4, ((0, 1), (2, 3)))
    value, sep = vertex_connectivity(g)
    assert value == 0 and sep.separator == ()
    with pytest.raises(ValueError):
        vertex_connectivity(Graph(0, ()))


def test_edge_connectivity_examples():
    c6 = build_basic("cycle", [6])
    value, cut = edge_connectivity(c6)
    assert value == 2
    _check_cut(c6, cut, 2)
    multi = Graph(2, ((0, 1),) * 3, simple=False)
    value, cut = edge_connectivity(multi)
    assert value == 3 and len(cut.edges) == 3
    rem = multigraph_counterexample(2)
    assert edge_connectivity(rem)[0] <= 1
    with pytest.raises(ValueError):
        edge_connectivity(Graph(1, ()))


def test_predicates_follow_size_conventions():
    assert is_k_plus_1_connected(build_basic("complete", [4]), 2)
    assert not is_k_plus_1_connected(build_basic("complete", [3]), 2)
    assert not is_k_plus_1_connected(build_basic("cycle", [5]), 2)
    assert is_k_plus_1_edge_connected(build_basic("complete", [5]), 2)
    assert not is_k_plus_1_edge_connected(build_basic("cycle", [6]), 2)
    assert not is_k_plus_1_edge_connected(Graph(1, ()), 1)


def test_find_separator_respects_limit():
    c5 = build_basic("cycle", [5])
    assert find_separator(c5, 1) is None
    _check_separation(c5, find_separator(c5, 2), 2)
    assert find_separator(build_basic("complete", [6]), 4) is None


def test_random_graphs_match_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9), multi=rng.random() < 0.3)
        kappa, sep = vertex_connectivity(g)
        assert kappa == brute_kappa(g)
        if sep is not None:
            _check_separation(g, sep, kappa)
        lam, cut = edge_connectivity(g)
        assert lam == brute_lambda(g)
        _check_cut(g, cut, lam)
        assert stoer_wagner(g)[0] == lam


def test_witnesses_are_deterministic():
    p = petersen()
    assert vertex_connectivity(p) == vertex_connectivity(Graph(10, tuple(reversed(p.edges))))
    assert edge_connectivity(p) == edge_connectivity(p)
