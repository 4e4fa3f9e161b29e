"""Seeded random instance generators and the theorem check suites.

Every suite returns a :class:`SuiteReport`; a failing trial records the
falsifying instance (as graph JSON) so it can be replayed. Trials draw from
``random.Random(f"{seed}:{trial}")``, so results do not depend on how trials
are spread over worker processes.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from .connectivity import EdgeCut, edge_cut_from_side, is_k_plus_1_connected, is_k_plus_1_edge_connected
from .constructions import (
    bipartite_series,
    mader_tight,
    multigraph_counterexample,
    thm2_series,
    thm6_construction,
)
from .extraction import (
    dense_extract,
    find_edge_connected_subgraph,
    find_vertex_connected_subgraph,
    verify_trace,
)
from .formats import to_json_obj
from .graph import Graph, induced_subgraph, is_bipartite, is_triangle_free
from .packing import verify_tree_packing
from .penalty import PenaltyParams, check_lemma_a, check_lemma_b, vertex_penalty_total, weights, weight_prefix_sum


@dataclass
class SuiteReport:
    name: str
    trials: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.trials - len(self.failures)}/{self.trials} trials ok"


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def _failure(g: Graph, reason: str, **extra) -> dict:
    return {"reason": reason, "graph": to_json_obj(g), **extra}


# -- generators --------------------------------------------------------------

def random_min_degree_graph(rng: random.Random, n: int, d: int) -> Graph:
    """Random simple graph on n vertices, topped up until every degree is >= d.

    Half the time the vertices are split into clusters that are dense inside
    and sparse between, so separations actually occur.
    """
    if n <= d:
        raise ValueError("need n > d")
    groups = max(1, min(rng.randint(1, 3), n // (d + 1)))
    label = [rng.randrange(groups) for _ in range(n)]
    p_in, p_out = rng.uniform(0.3, 0.9), rng.uniform(0.0, 0.15)
    adj = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < (p_in if label[u] == label[v] else p_out):
                adj[u].add(v)
                adj[v].add(u)
    for u in rng.sample(range(n), n):
        while len(adj[u]) < d:
            same = [v for v in range(n) if v != u and v not in adj[u] and label[v] == label[u]]
            pool = same or [v for v in range(n) if v != u and v not in adj[u]]
            v = rng.choice(pool)
            adj[u].add(v)
            adj[v].add(u)
    return Graph(n, tuple((u, v) for u in range(n) for v in adj[u] if u < v))


def _top_up(rng, n, allowed_pairs, edges: set, target: int) -> None:
    pool = [e for e in allowed_pairs if e not in edges]
    rng.shuffle(pool)
    while len(edges) < target and pool:
        edges.add(pool.pop())


def random_triangle_free_graph(rng: random.Random, k: int) -> Graph:
    """Triangle-free graph with average degree >= 2k.

    Cycles through three shapes: random bipartite, random C5 blow-up (not
    bipartite), and the greedy random triangle-free process.
    """
    shape = rng.randrange(3)
    if shape == 2:
        n = rng.randint(4 * k, 4 * k + 8)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        adj = [set() for _ in range(n)]
        for u, v in pairs:
            if not adj[u] & adj[v]:
                adj[u].add(v)
                adj[v].add(u)
        g = Graph(n, tuple((u, v) for u in range(n) for v in adj[u] if u < v))
        if g.num_edges >= k * n:
            return g
        shape = 0
    if shape == 0:
        p, q = rng.randint(2 * k, 2 * k + 6), rng.randint(2 * k, 2 * k + 6)
        n = p + q
        pairs = [(u, p + v) for u in range(p) for v in range(q)]
    else:
        sizes = [rng.randint(k + 1, 2 * k + 2) for _ in range(5)]
        starts = [sum(sizes[:i]) for i in range(5)]
        n = sum(sizes)
        pairs = []
        for i in range(5):
            j = (i + 1) % 5
            pairs += [tuple(sorted((starts[i] + x, starts[j] + y)))
                      for x in range(sizes[i]) for y in range(sizes[j])]
    target = min(len(pairs), k * n + rng.randint(0, n))
    edges = {e for e in pairs if rng.random() < 0.5}
    _top_up(rng, n, pairs, edges, target)
    return Graph(n, tuple(edges))


def random_dense_graph(rng: random.Random, k: int, simple: bool) -> Graph:
    """Random graph with e > k(v - 1), often with a planted dense part and sparse fringe."""
    if simple:
        n = rng.randint(2 * k + 1, 2 * k + 12)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        planted = rng.random() < 0.5
        if planted:
            core = set(rng.sample(range(n), rng.randint(2 * k + 1, n)))
            rich = [e for e in pairs if e[0] in core and e[1] in core]
            poor = [e for e in pairs if not (e[0] in core and e[1] in core)]
            edges = set(rng.sample(rich, min(len(rich), k * (len(core) - 1) + 1 + rng.randint(0, len(core)))))
            edges |= set(rng.sample(poor, rng.randint(0, min(len(poor), n))))
        else:
            edges = set()
        target = k * (n - 1) + 1 + rng.randint(0, n)
        _top_up(rng, n, pairs, edges, min(target, len(pairs)))
        g = Graph(n, tuple(edges))
        if g.num_edges > k * (n - 1):
            return g
        return Graph(n, tuple(pairs))
    n = rng.randint(2, 14)
    m = k * (n - 1) + 1 + rng.randint(0, n)
    edges = tuple(tuple(rng.sample(range(n), 2)) for _ in range(m))
    return Graph(n, edges, simple=False)


def random_simple_graph(rng: random.Random, n: int, avg_degree: float) -> Graph:
    p = min(1.0, max(0.0, avg_degree / max(1, n - 1)))
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


# -- trials ------------------------------------------------------------------

def thm1_trial(k: int, seed: int, trial: int) -> dict | None:
    rng = trial_rng(seed, trial)
    g = random_min_degree_graph(rng, rng.randint(3 * k, 30), 3 * k - 1)
    res = find_vertex_connected_subgraph(g, k, 2 * k)
    if not res.found:
        return _failure(g, "no witness returned")
    sub, _ = induced_subgraph(g, res.witness)
    if len(res.witness) <= 2 * k or not is_k_plus_1_connected(sub, k):
        return _failure(g, "witness failed re-verification", witness=list(res.witness))
    return None


def thm3_trial(k: int, seed: int, trial: int) -> dict | None:
    rng = trial_rng(seed, trial)
    g = random_triangle_free_graph(rng, k)
    if not is_triangle_free(g) or 2 * g.num_edges < 2 * k * g.n:
        return _failure(g, "generator produced an invalid instance")
    if g.num_edges > math.ceil(g.n / 2) ** 2:
        return _failure(g, "triangle-free edge bound violated")
    res = find_vertex_connected_subgraph(g, k, 2 * k + 1)
    if not res.found:
        return _failure(g, "no witness of size >= 2(k+1)")
    sub, _ = induced_subgraph(g, res.witness)
    if not is_k_plus_1_connected(sub, k) or sub.num_edges > math.ceil(sub.n / 2) ** 2:
        return _failure(g, "witness failed re-verification", witness=list(res.witness))
    return None


def thm4_trial(k: int, seed: int, trial: int) -> dict | None:
    rng = trial_rng(seed, trial)
    g = random_dense_graph(rng, k, simple=trial % 2 == 0)
    out = dense_extract(g, k)
    sub = out.subgraph
    if sub.num_edges <= k * (sub.n - 1):
        return _failure(g, "density lost", vertices=list(out.vertices))
    if not is_k_plus_1_edge_connected(sub, k):
        return _failure(g, "not (k+1)-edge-connected", vertices=list(out.vertices))
    if not verify_tree_packing(g_sub := induced_subgraph(g, out.vertices)[0], _relabel(out), k):
        return _failure(g_sub, "tree packing failed re-verification")
    if g.simple and sub.n <= 2 * k:
        return _failure(g, "simple input but v(G') <= 2k", vertices=list(out.vertices))
    return None


def _relabel(out) -> list:
    index = {v: i for i, v in enumerate(out.vertices)}
    return [[(index[u], index[v]) for u, v in tree] for tree in out.trees]


def lemma_a_trial(k: int, alpha: float, seed: int, trial: int) -> dict | None:
    rng = trial_rng(seed, trial)
    p = PenaltyParams.default(k, alpha)
    n = rng.randint(2, 3 * k)
    g = random_simple_graph(rng, n, rng.uniform(0.3 * k, k + p.m + 2))
    low = [v for v in range(n) if g.degree(v) <= k]
    if not low:
        w = rng.randrange(n)
        keep = set(rng.sample(sorted(g.adjacency[w]), rng.randint(0, k)))
        g = Graph(n, tuple(e for e in g.edges if w not in e or (e[0] if e[1] == w else e[1]) in keep))
        low = [w]
    w = rng.choice(low)
    check = check_lemma_a(g, w, p)
    if not check.holds:
        return _failure(g, "lemma a violated", w=w, lhs=check.lhs, rhs=check.rhs, k=k, alpha=alpha)
    return None


def random_cut_instance(rng: random.Random, k: int, m: float) -> tuple[Graph, EdgeCut]:
    na, nb = rng.randint(1, 2 * k), rng.randint(1, 2 * k)
    ga = random_simple_graph(rng, na, rng.uniform(0, k + m))
    gb = random_simple_graph(rng, nb, rng.uniform(0, k + m))
    edges = list(ga.edges) + [(u + na, v + na) for u, v in gb.edges]
    cross = [(u, na + v) for u in range(na) for v in range(nb)]
    edges += rng.sample(cross, rng.randint(0, min(k, len(cross))))
    g = Graph(na + nb, tuple(edges))
    return g, edge_cut_from_side(g, tuple(range(na)))


def lemma_b_trial(k: int, alpha: float, seed: int, trial: int) -> dict | None:
    rng = trial_rng(seed, trial)
    p = PenaltyParams.default(k, alpha)
    g, cut = random_cut_instance(rng, k, p.m)
    check = check_lemma_b(g, cut, p)
    if not check.holds:
        return _failure(g, "lemma b violated", side_a=list(cut.side_a), lhs=check.lhs, rhs=check.rhs,
                        k=k, alpha=alpha)
    return None


def random_absorption_instance(rng: random.Random, s: int, t: int, tries: int = 500):
    """(G, A, B) with G (s+t+1)-connected, G[A] (s+1)- and G[B] (t+1)-connected, X nonempty.

    Some leftover vertices lean towards B (few neighbours in A ∪ X), so the
    absorption loop has to split off pieces instead of swallowing X at once.
    """
    for _ in range(tries):
        na, nb, nx = rng.randint(s + 3, s + 6), rng.randint(t + 3, t + 6), rng.randint(2, 8)
        n = na + nb + nx
        order = rng.sample(range(n), n)
        a, b, x = order[:na], order[na:na + nb], order[na + nb:]
        edges = set()

        def link(u, v):
            edges.add((min(u, v), max(u, v)))

        for part in (a, b):
            for i, u in enumerate(part):
                for v in part[i + 1:]:
                    if rng.random() < 0.8:
                        link(u, v)
        for v in x:
            if rng.random() < 0.5:
                for w in rng.sample(b, min(len(b), s + t + 1)):
                    link(v, w)
                for w in rng.sample(a + x, rng.randint(0, s)):
                    if w != v:
                        link(v, w)
            else:
                for w in rng.sample(a, min(len(a), s + 1)) + rng.sample(b + x, t + 1):
                    if w != v:
                        link(v, w)
        g = Graph(n, tuple(edges))
        if not is_k_plus_1_connected(g, s + t):
            continue
        if is_k_plus_1_connected(induced_subgraph(g, a)[0], s) and is_k_plus_1_connected(induced_subgraph(g, b)[0], t):
            return g, sorted(a), sorted(b)
    raise RuntimeError("no valid absorption instance found")


def _run_trials(name: str, fn, trials: int, jobs: int) -> SuiteReport:
    report = SuiteReport(name, trials)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(fn, range(trials)))
    else:
        results = [fn(i) for i in range(trials)]
    for i, res in enumerate(results):
        if res is not None:
            res["trial"] = i
            report.failures.append(res)
    return report


def suite_thm1(k: int, trials: int = 100, seed: int = 0, jobs: int = 1) -> SuiteReport:
    return _run_trials(f"thm1 k={k}", partial(thm1_trial, k, seed), trials, jobs)


def suite_thm3(k: int, trials: int = 100, seed: int = 0, jobs: int = 1) -> SuiteReport:
    report = _run_trials(f"thm3 k={k}", partial(thm3_trial, k, seed), trials, jobs)
    series = bipartite_series(k)
    g = series.graph
    report.trials += 1
    ok = is_bipartite(g) and min(g.degrees) >= 2 * k - 1
    res = find_vertex_connected_subgraph(g, k, 0)
    if not ok or res.found or not verify_trace(g, res.trace):
        report.failures.append(_failure(g, "bipartite glue series is not a sharpness example"))
    report.notes["bipartite_series"] = {"n": g.n, "min_degree": min(g.degrees)}
    return report


def suite_thm4(k: int, trials: int = 100, seed: int = 0, jobs: int = 1) -> SuiteReport:
    report = _run_trials(f"thm4 k={k}", partial(thm4_trial, k, seed), trials, jobs)
    for n in (k + 1, 2 * k + 3, 3 * k + 5):
        report.trials += 1
        g = mader_tight(n, k)
        try:
            dense_extract(g, k)
        except ValueError:
            continue
        report.failures.append(_failure(g, "Mader-tight graph was not rejected"))
    return report


def suite_lemmas(ks=(9, 16, 25), alphas=(0.1, 0.3, 0.45), trials: int = 200, seed: int = 0,
                 jobs: int = 1, max_l: int = 10_000) -> SuiteReport:
    report = SuiteReport("lemmas")
    for k in ks:
        for alpha in alphas:
            for fn, tag in ((lemma_a_trial, "a"), (lemma_b_trial, "b")):
                sub = _run_trials(f"lemma {tag}", partial(fn, k, alpha, seed), trials, jobs)
                report.trials += sub.trials
                report.failures += sub.failures
    for alpha in alphas:
        report.trials += 1
        bad = prefix_bound_failures(alpha, max_l)
        if bad:
            report.failures.append({"reason": "prefix weight bound", "alpha": alpha, "l": bad[:5]})
    return report


def prefix_bound_failures(alpha: float, max_l: int) -> list[int]:
    """Every l <= max_l whose running weight sum escapes [l^alpha - 1, l^alpha]."""
    bad = []
    total = 0.0
    for l, w in enumerate(weights(max_l, alpha), start=1):
        total += w
        if not l ** alpha - 1 - 1e-9 <= total <= l ** alpha + 1e-9:
            bad.append(l)
    for l in (1, 2, 10, 100, 1000, max_l):
        try:
            weight_prefix_sum(l, alpha)
        except ArithmeticError:
            bad.append(l)
    return bad


def suite_thm2(k: int, budget: int = 10**6) -> SuiteReport:
    report = SuiteReport(f"thm2 k={k}", 1)
    series = thm2_series(k)
    g = series.graph
    floor = 3 * k - 3
    res = find_vertex_connected_subgraph(g, k, math.ceil(4 * k / 3), budget)
    report.notes = {"n": g.n, "min_degree": min(g.degrees), "x_sizes": series.x_sizes(),
                    "subproblems": res.subproblems,
                    "potential": vertex_penalty_total(g, k).total}
    if min(g.degrees) < floor:
        report.failures.append(_failure(g, f"min degree {min(g.degrees)} < {floor}"))
    elif res.found or not verify_trace(g, res.trace):
        report.failures.append(_failure(g, "expected a replayable nonexistence trace"))
    return report


def suite_remark3(k: int) -> SuiteReport:
    report = SuiteReport(f"remark3 k={k}", 1)
    g = multigraph_counterexample(k)
    res = find_edge_connected_subgraph(g, k)
    if set(g.degrees) != {2 * k - 1}:
        report.failures.append(_failure(g, "degrees are not all 2k-1"))
    elif res.found or not verify_trace(g, res.trace):
        report.failures.append(_failure(g, "expected a replayable nonexistence trace"))
    return report


def suite_thm6(k: int = 16, C: int = 1) -> SuiteReport:
    report = SuiteReport(f"thm6 k={k} C={C}", 1)
    out = thm6_construction(k, C)
    g = out.graph
    floor = k + C * math.isqrt(k)
    cuts = []
    for state, (left, _right) in zip(out.states[1:], out.halves):
        inside = set(left)
        cuts.append(sum(1 for u, v in state.graph.edges if (u in inside) != (v in inside)))
    res = find_edge_connected_subgraph(g, k)
    report.notes = {"n": g.n, "min_degree": min(g.degrees), "cross_cuts": cuts}
    if min(g.degrees) < floor:
        report.failures.append(_failure(g, f"min degree {min(g.degrees)} < {floor}"))
    if any(c > k for c in cuts):
        report.failures.append(_failure(g, f"cross cut exceeds k: {cuts}"))
    if res.found or not verify_trace(g, res.trace):
        report.failures.append(_failure(g, "expected a replayable nonexistence trace"))
    return report


def potential_bound_holds(g: Graph, k: int) -> bool:
    """Sum of clamped degree deficits is >= 2k^2 (for certified graphs with v > 2k)."""
    return vertex_penalty_total(g, k).total >= 2 * k * k


SUITES = ("thm1", "thm2", "thm3", "thm4", "thm6", "remark3", "lemmas")


def run_suite(name: str, k: int | None = None, trials: int = 100, seed: int = 0, jobs: int = 1,
              C: int = 1, alpha: float | None = None, budget: int = 10**6) -> list[SuiteReport]:
    """Run one named suite; ``k=None`` means the default range for that suite."""
    if name == "thm1":
        return [suite_thm1(kk, trials, seed, jobs) for kk in ([k] if k else [1, 2, 3])]
    if name == "thm2":
        return [suite_thm2(kk, budget) for kk in ([k] if k else [2, 3, 4])]
    if name == "thm3":
        return [suite_thm3(kk, trials, seed, jobs) for kk in ([k] if k else [1, 2, 3])]
    if name == "thm4":
        return [suite_thm4(kk, trials, seed, jobs) for kk in ([k] if k else [1, 2, 3])]
    if name == "thm6":
        return [suite_thm6(k or 16, C)]
    if name == "remark3":
        return [suite_remark3(kk) for kk in ([k] if k else range(2, 7))]
    if name == "lemmas":
        ks = (k,) if k else (9, 16, 25)
        alphas = (alpha,) if alpha else (0.1, 0.3, 0.45)
        return [suite_lemmas(ks, alphas, trials, seed, jobs)]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
