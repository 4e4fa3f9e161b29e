"""Acceptance criteria 1-10, one test each. A per-criterion PASS/FAIL line is
printed in the terminal summary (see conftest.py)."""

from __future__ import annotations

import itertools
import random
import time

import pytest

from highconn.connectivity import edge_connectivity, vertex_connectivity
from highconn.constructions import thm2_series
from highconn.decomposition import (
    DecompositionError,
    decompose_edge,
    decompose_vertex,
    thomassen_extend,
    verify_partition,
)
from highconn.extraction import (
    find_edge_connected_subgraph,
    find_vertex_connected_subgraph,
    verify_trace,
)
from highconn.graph import Graph, build_basic
from highconn.penalty import PenaltyParams, edge_penalty_profile, vertex_penalty_total, weighted_penalty
from highconn.suites import (
    random_absorption_instance,
    suite_lemmas,
    suite_remark3,
    suite_thm1,
    suite_thm2,
    suite_thm3,
    suite_thm4,
    suite_thm6,
)

from oracles import (
    all_graphs,
    brute_has_edge_connected,
    brute_has_vertex_connected,
    brute_kappa,
    brute_lambda,
    brute_weighted_penalty,
    random_graph,
)

SEED = 7


def _assert_clean(reports):
    for rep in reports:
        print(rep.summary())
        assert rep.passed, rep.failures[:1]


def test_criterion_01_random_min_degree_graphs_have_witnesses():
    start = time.perf_counter()
    _assert_clean([suite_thm1(k, 100, SEED) for k in (1, 2, 3)])
    assert time.perf_counter() - start < 60


def test_criterion_02_thm2_series_nonexistence():
    start = time.perf_counter()
    reports = [suite_thm2(k) for k in (2, 3, 4)]
    _assert_clean(reports)
    for k, rep in zip((2, 3, 4), reports):
        assert rep.notes["min_degree"] >= 3 * k - 3
    assert time.perf_counter() - start < 300


def test_criterion_03_triangle_free_suite_and_bipartite_sharpness():
    reports = [suite_thm3(k, 100, SEED) for k in (1, 2, 3)]
    _assert_clean(reports)
    for k, rep in zip((1, 2, 3), reports):
        assert rep.notes["bipartite_series"]["min_degree"] >= 2 * k - 1


def test_criterion_04_dense_extract_suite():
    _assert_clean([suite_thm4(k, 100, SEED) for k in (1, 2, 3)])


def test_criterion_05_multigraph_counterexample():
    _assert_clean([suite_remark3(k) for k in range(2, 7)])


def test_criterion_06_thm6_construction():
    start = time.perf_counter()
    rep = suite_thm6(16, 1)
    _assert_clean([rep])
    assert rep.notes["n"] == 96 and rep.notes["min_degree"] >= 20
    assert all(c <= 16 for c in rep.notes["cross_cuts"])
    assert time.perf_counter() - start < 60


def test_criterion_07_lemma_suites_and_prefix_bounds():
    rep = suite_lemmas((9, 16, 25), (0.1, 0.3, 0.45), trials=200, seed=SEED, max_l=10_000)
    _assert_clean([rep])
    assert rep.trials == 9 * 2 * 200 + 3


def _oracle_sample(seed: int = SEED):
    """Exhaustive graphs on <= 5 vertices, then seeded samples on 6-8 vertices."""
    for n in range(1, 6):
        yield from all_graphs(n)
    rng = random.Random(seed)
    for n in (6, 7, 8):
        for _ in range(60):
            yield random_graph(rng, n, rng.uniform(0.2, 0.95))


def _certified_small_graphs():
    """Sampled graphs with v > 2k certified to lack a (k+1)-connected subgraph on > 2k vertices."""
    out = []
    for g in _oracle_sample():
        for k in (1, 2, 3):
            if g.n > 2 * k:
                res = find_vertex_connected_subgraph(g, k, 2 * k)
                if not res.found:
                    assert verify_trace(g, res.trace)
                    out.append((g, k))
    return out


def test_criterion_08_oracle_equivalences():
    checked = 0
    for g in _oracle_sample():
        if g.n >= 2:
            assert vertex_connectivity(g)[0] == brute_kappa(g)
            assert edge_connectivity(g)[0] == brute_lambda(g)
        if g.n <= 6 or checked % 3 == 0:
            for k in (0, 1, 2):
                for min_size in {0, k + 2, g.n - 1}:
                    assert find_vertex_connected_subgraph(g, k, min_size).found == \
                        brute_has_vertex_connected(g, k, min_size)
                assert find_edge_connected_subgraph(g, k).found == brute_has_edge_connected(g, k)
        checked += 1
    rng = random.Random(SEED)
    multi = 0
    for _ in range(150):
        g = random_graph(rng, rng.randint(2, 8), rng.uniform(0.2, 0.9), multi=True)
        assert vertex_connectivity(g)[0] == brute_kappa(g)
        assert edge_connectivity(g)[0] == brute_lambda(g)
        if g.n <= 6:
            k = rng.randint(0, 3)
            assert find_edge_connected_subgraph(g, k).found == brute_has_edge_connected(g, k)
        multi += g.has_parallel_edges()
    assert multi > 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        k = rng.randint(1, 5)
        p = PenaltyParams(k, rng.uniform(0, k), rng.uniform(0.01, 0.49))
        values = edge_penalty_profile(g, p).values
        assert weighted_penalty(g, p) == pytest.approx(brute_weighted_penalty(values, p.alpha), abs=1e-9)
    print(f"oracle sample: {checked} graphs")


def test_criterion_09_potential_bound():
    certified = [(thm2_series(k).graph, k) for k in (2, 3, 4)]
    for g, k in certified:
        res = find_vertex_connected_subgraph(g, k, 2 * k)
        assert not res.found and verify_trace(g, res.trace)
    certified += _certified_small_graphs()
    assert len(certified) > 100
    worst = min(vertex_penalty_total(g, k).total - 2 * k * k for g, k in certified)
    print(f"{len(certified)} certified graphs, min slack of M - 2k^2 = {worst}")
    for g, k in certified:
        assert g.n > 2 * k
        assert vertex_penalty_total(g, k).total >= 2 * k * k, (g, k)


def test_criterion_10_decomposition():
    for s, t in itertools.product(range(1, 3), repeat=2):
        if s + t > 3:
            continue
        g = build_basic("complete", [3 * s + 3 * t + 1])
        w = decompose_vertex(g, s, t)
        verify_partition(g, w, s, t, "vertex", (2 * s, 2 * t))
    rng = random.Random(SEED)
    rounds = 0
    for _ in range(50):
        s, t = rng.choice([(1, 1), (1, 2), (2, 1), (2, 2)])
        g, a, b = random_absorption_instance(rng, s, t)
        w = thomassen_extend(g, a, b, s, t)
        assert all(x > y for x, y in zip(w.history, w.history[1:])) and w.history[-1] == 0
        verify_partition(g, w, s, t, "vertex")
        rounds += len(w.history) > 2
    assert rounds >= 10
    invalid = [
        lambda: decompose_vertex(build_basic("cycle", [5]), 1, 1),
        lambda: decompose_vertex(build_basic("complete", [8]), 1, 1, triangle_free=True),
        lambda: decompose_edge(build_basic("cycle", [6]), 1, 1),
        lambda: thomassen_extend(build_basic("cycle", [8]), [0, 1, 2], [4, 5, 6], 1, 1),
        lambda: thomassen_extend(build_basic("complete", [7]), [0, 1, 2], [2, 3, 4], 1, 1),
        lambda: thomassen_extend(Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5))), [0, 1, 2], [3, 4, 5], 1, 1),
    ]
    for make in invalid:
        with pytest.raises(DecompositionError) as info:
            make()
        assert info.value.stage in ("degree_partition", "extraction", "absorption")
