from __future__ import annotations

import dataclasses
import math
import random

import pytest

from highconn.connectivity import Separation, is_k_plus_1_connected, is_k_plus_1_edge_connected
from highconn.constructions import mader_tight, multigraph_counterexample, thm2_base
from highconn.extraction import (
    EXHAUSTED,
    LOW_DEGREE,
    BudgetExceeded,
    TraceError,
    dense_extract,
    find_edge_connected_subgraph,
    find_vertex_connected_subgraph,
    peel,
    verify_trace,
)
from highconn.graph import Graph, build_basic, count_edges_within, induced_subgraph
from highconn.packing import verify_tree_packing

from oracles import brute_has_edge_connected, brute_has_vertex_connected, random_graph


def test_peel_examples():
    k4 = build_basic("complete", [4])
    res = peel(k4, 3)
    assert res.z == 4 and res.core_vertices == ()
    res = peel(k4, 2)
    assert res.z == 0 and res.core == k4
    k23 = build_basic("complete_bipartite", [2, 3])
    res = peel(k23, 2)
    assert res.core_vertices == () and set(res.sequence[:3]) == {2, 3, 4}


def _peel_in_order(g, k, order):
    alive = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in order:
            if v in alive and sum(m for w, m in g.adjacency[v].items() if w in alive) <= k:
                alive.discard(v)
                changed = True
    return tuple(sorted(alive))


def test_peel_core_is_order_independent():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12), rng.uniform(0.2, 0.8), multi=rng.random() < 0.3)
        k = rng.randint(0, 4)
        order = list(range(g.n))
        rng.shuffle(order)
        assert peel(g, k).core_vertices == _peel_in_order(g, k, order)


def test_vertex_search_examples():
    c5 = build_basic("cycle", [5])
    res = find_vertex_connected_subgraph(c5, 1, 2)
    assert res.witness == (0, 1, 2, 3, 4)
    k6 = build_basic("complete", [6])
    res = find_vertex_connected_subgraph(k6, 3, 6)
    assert not res.found and verify_trace(k6, res.trace)
    base, _ = thm2_base(3)
    res = find_vertex_connected_subgraph(base, 3, math.ceil(4 * 3 / 3))
    assert not res.found and verify_trace(base, res.trace)


def test_edge_search_examples():
    k5 = build_basic("complete", [5])
    assert find_edge_connected_subgraph(k5, 2).witness == (0, 1, 2, 3, 4)
    g = multigraph_counterexample(2)
    res = find_edge_connected_subgraph(g, 2)
    assert not res.found and verify_trace(g, res.trace)
    assert res.trace.root.split is not None and len(res.trace.root.split.edges) == 1
    assert set(res.trace.leaf_verdicts()) == {LOW_DEGREE}


def test_budget_is_reported_separately():
    base, _ = thm2_base(3)
    with pytest.raises(BudgetExceeded):
        find_vertex_connected_subgraph(base, 3, 4, budget=2)


def test_search_agrees_with_brute_force():
    rng = random.Random(8)
    for _ in range(150):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.uniform(0.3, 0.95))
        k = rng.randint(0, 3)
        min_size = rng.randint(0, n)
        res = find_vertex_connected_subgraph(g, k, min_size)
        assert res.found == brute_has_vertex_connected(g, k, min_size)
        if res.found:
            sub, _ = induced_subgraph(g, res.witness)
            assert len(res.witness) > min_size and is_k_plus_1_connected(sub, k)
        else:
            assert verify_trace(g, res.trace)
        multi = random_graph(rng, n, rng.uniform(0.3, 0.9), multi=True)
        res = find_edge_connected_subgraph(multi, k)
        assert res.found == brute_has_edge_connected(multi, k)
        if res.found:
            assert is_k_plus_1_edge_connected(induced_subgraph(multi, res.witness)[0], k)
        else:
            assert verify_trace(multi, res.trace)


def test_tampered_traces_are_rejected():
    base, _ = thm2_base(3)
    trace = find_vertex_connected_subgraph(base, 3, 4).trace
    # peeling a vertex that still has high degree
    bad = dataclasses.replace(trace, root=dataclasses.replace(trace.root, peeled=(0,) + trace.root.peeled))
    with pytest.raises(TraceError):
        verify_trace(base, bad)
    # a different graph
    with pytest.raises(TraceError):
        verify_trace(build_basic("complete", [base.n]), trace)
    # a fake separator
    root = trace.root
    if root.split is not None:
        sep = root.split
        forged = Separation(sep.separator[:-1], sep.side_a, sep.side_b + sep.separator[-1:])
        with pytest.raises(TraceError):
            verify_trace(base, dataclasses.replace(trace, root=dataclasses.replace(root, split=forged)))
    # an exhausted leaf pointing at nothing
    fake = dataclasses.replace(trace, root=dataclasses.replace(root, verdict=EXHAUSTED, split=None, children=[]))
    with pytest.raises(TraceError):
        verify_trace(base, fake)


def test_dense_extract_examples():
    k5 = build_basic("complete", [5])
    assert dense_extract(k5, 2).vertices == (0, 1, 2, 3, 4)
    k6_pendant = Graph(7, build_basic("complete", [6]).edges + ((5, 6),))
    out = dense_extract(k6_pendant, 2)
    assert out.vertices == (0, 1, 2, 3, 4, 5)
    with pytest.raises(ValueError):
        dense_extract(mader_tight(6, 2), 2)


def test_dense_extract_properties_on_random_inputs():
    rng = random.Random(4)
    for _ in range(120):
        k = rng.randint(1, 3)
        multi = rng.random() < 0.5
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.4, 1.0), multi=multi)
        if g.num_edges <= k * (g.n - 1):
            continue
        out = dense_extract(g, k)
        v = len(out.vertices)
        assert count_edges_within(g, out.vertices) > k * (v - 1)
        sub, _ = induced_subgraph(g, out.vertices)
        assert is_k_plus_1_edge_connected(sub, k)
        index = {x: i for i, x in enumerate(out.vertices)}
        trees = [[(index[a], index[b]) for a, b in t] for t in out.trees]
        assert verify_tree_packing(sub, trees, k)
        if not g.has_parallel_edges():
            assert v > 2 * k
