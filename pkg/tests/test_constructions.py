from __future__ import annotations

import math

import pytest

from highconn.connectivity import edge_connectivity, is_k_plus_1_connected
from highconn.constructions import (
    bipartite_series,
    glue_series,
    layer_sizes,
    mader_tight,
    multigraph_counterexample,
    thm2_base,
    thm2_series,
    thm2_variant,
    thm6_construction,
    thm6_parameters_ok,
)
from highconn.extraction import find_edge_connected_subgraph, find_vertex_connected_subgraph, peel, verify_trace
from highconn.graph import is_bipartite


def test_mader_tight():
    g = mader_tight(6, 2)
    assert g.num_edges == 9 == 2 * (6 - 1.5)
    for n, k in ((6, 2), (10, 3)):
        assert peel(mader_tight(n, k), k).core_vertices == ()
    with pytest.raises(ValueError):
        mader_tight(3, 3)


def test_multigraph_counterexample():
    for k, mid in ((2, 1), (4, 3)):
        g = multigraph_counterexample(k)
        assert g.n == 2 * (k + 1) and set(g.degrees) == {2 * k - 1}
        cut = sum(1 for u, v in g.edges if (u <= k) != (v <= k))
        assert cut == mid == k - 1
        assert edge_connectivity(g)[0] <= k - 1
    with pytest.raises(ValueError):
        multigraph_counterexample(1)


def test_layer_sizes():
    for k in range(2, 12):
        a, b, c = layer_sizes(k)
        assert a + b + c == k - 1 and a >= b >= c and a - c <= 1


def test_thm2_base_k3():
    g, lay = thm2_base(3)
    assert (lay.a, lay.b, lay.c, lay.l) == (1, 1, 0, 6) and g.n == 15
    assert len(lay.X) == 3
    assert {g.degree(x) for x in lay.X} == {4}
    assert {g.degree(v) for v in range(g.n) if v not in lay.X} == {6}
    assert all(g.degree(v) == 3 * (3 - 1) for v in lay.V[0])


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_thm2_layout_invariants(k):
    g, lay = thm2_base(k)
    assert len(lay.V[0]) == k and all(len(v) == k - 1 for v in lay.V[1:])
    assert all(len(w) == k for w in lay.W[1:])
    assert len(lay.X) <= 2 * k - 1
    assert lay.w_list == lay.A[1] + lay.B[1] + lay.A[2]
    for j in range(1, lay.l + 1):
        # inside G_j = H[V_0 .. V_j], the neighbourhood of V_j is exactly W_j
        earlier = {v for i in range(j) for v in lay.V[i]}
        block = set(lay.V[j])
        nbrs = {w for v in block for w in g.adjacency[v] if w in earlier}
        assert nbrs == set(lay.W[j])


def test_glue_series_sizes_follow_closed_form():
    for k in (2, 3, 4, 5):
        s = thm2_series(k)
        sizes = s.x_sizes()
        assert sizes[0] == 2 * k - 1
        for j in range(len(sizes) - 1):
            assert sizes[j + 1] == max(2 * sizes[j] - 2 * k, 0)
            if j >= 1:
                assert sizes[j] == max(2 * k - 2 ** j, 0)
        assert all(len(st.Y) == min(k, len(st.X)) and set(st.Y) <= set(st.X) for st in s.states)


def test_thm2_series_k3():
    s = thm2_series(3)
    assert s.x_sizes() == [5, 4, 2, 0] and s.copies == 8
    assert min(s.graph.degrees) >= 6
    assert not s.graph.has_parallel_edges()


def test_thm2_variant_k6():
    s = thm2_variant(6)
    g = s.graph
    k = 6
    assert min(g.degrees) >= 3 * k - 3 - math.ceil(k / 6) - 1
    res = find_vertex_connected_subgraph(g, k, 0)
    assert not res.found and verify_trace(g, res.trace)
    with pytest.raises(ValueError):
        thm2_variant(2)


def test_bipartite_series():
    for k in (1, 2, 3):
        g = bipartite_series(k).graph
        assert is_bipartite(g) and min(g.degrees) >= 2 * k - 1
        res = find_vertex_connected_subgraph(g, k, 0)
        assert not res.found and verify_trace(g, res.trace)


def test_glue_series_degree_floor_enforced():
    s = bipartite_series(2)
    with pytest.raises(RuntimeError):
        glue_series(s.states[0].graph, s.states[0].X, 2, 10)


def test_thm6_16_1():
    assert thm6_parameters_ok(16, 1) and not thm6_parameters_ok(15, 1) and not thm6_parameters_ok(16, 2)
    out = thm6_construction(16, 1)
    g = out.graph
    assert out.states[0].graph.n == 21
    assert g.n == 96 and min(g.degrees) >= 20 and not g.has_parallel_edges()
    assert out.cross_cuts == [16, 16]
    for j, st in enumerate(out.states):
        assert len(st.A) == 2 ** j * 5
        assert min(st.graph.degree(a) for a in st.A) >= 16 + j * 4 // 2
    for st, (left, _) in zip(out.states[1:], out.halves):
        inside = set(left)
        assert sum(1 for u, v in st.graph.edges if (u in inside) != (v in inside)) <= 16
    res = find_edge_connected_subgraph(g, 16)
    assert not res.found and verify_trace(g, res.trace)
    with pytest.raises(ValueError):
        thm6_construction(9, 1)


def test_constructions_are_deterministic():
    assert thm2_series(3).graph == thm2_series(3).graph
    assert thm6_construction(16, 1).graph == thm6_construction(16, 1).graph


def test_k_plus_2_vertices_needed():
    g, _ = thm2_base(2)
    assert not is_k_plus_1_connected(g, g.n)
