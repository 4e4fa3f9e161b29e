"""Generators for the extremal graph families.

Each generator is deterministic and returns the graph together with the
labelled vertex sets used to build it. None of them certifies its own
properties; that is left to the connectivity and extraction modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Graph, VertexSet, build_basic, glue, glue_embedding, vertex_set


def mader_tight(n: int, k: int) -> Graph:
    """Clique on ``0..k-1``, anticlique on the rest, all edges between them.

    It has exactly k(n - (k+1)/2) edges and its (k+1)-core is empty.
    """
    if not 1 <= k < n:
        raise ValueError(f"need n > k >= 1, got n={n}, k={k}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, n)]
    return Graph(n, tuple(edges))


def multigraph_counterexample(k: int) -> Graph:
    """Path 0..2k+1 with k-1 parallel edges per step, plus two fans of single edges.

    Vertex 0 gets one extra edge to each of 1..k and vertex 2k+1 one extra
    edge to each of k+1..2k, so every vertex has degree 2k-1 and only the k-1
    parallel edges between k and k+1 join the two halves.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    n = 2 * (k + 1)
    edges = []
    for i in range(n - 1):
        edges += [(i, i + 1)] * (k - 1)
    edges += [(0, j) for j in range(1, k + 1)]
    edges += [(n - 1, j) for j in range(k + 1, 2 * k + 1)]
    return Graph(n, tuple(edges), simple=False)


def layer_sizes(k: int) -> tuple[int, int, int]:
    """(a, b, c) with a >= b >= c, pairwise difference <= 1 and a + b + c = k - 1."""
    q, r = divmod(k - 1, 3)
    return q + (r >= 1), q + (r >= 2), q


@dataclass
class Thm2Layout:
    k: int
    a: int
    b: int
    c: int
    l: int
    V: list[VertexSet]
    A: list[VertexSet]
    B: list[VertexSet]
    C: list[VertexSet]
    W: list[VertexSet]
    w_list: VertexSet
    X: VertexSet
    padding: VertexSet = ()
    split: bool = False

    def as_dict(self) -> dict:
        return {
            "k": self.k, "a": self.a, "b": self.b, "c": self.c, "l": self.l,
            "V": [list(s) for s in self.V],
            "A": [list(s) for s in self.A],
            "B": [list(s) for s in self.B],
            "C": [list(s) for s in self.C],
            "W": [list(s) for s in self.W],
            "w_list": list(self.w_list),
            "X": list(self.X),
            "padding": list(self.padding),
            "split": self.split,
        }


def _halves(part: VertexSet) -> tuple[VertexSet, VertexSet]:
    h = (len(part) + 1) // 2
    return part[:h], part[h:]


def thm2_base(k: int, split: bool = False) -> tuple[Graph, Thm2Layout]:
    """Layered graph: anticlique V_0 on k vertices and l = 3+2a+b cliques V_j on k-1.

    V_1, V_2, V_3 are joined completely to V_0; for j >= 4, V_j is joined
    completely to W_j = A_{j-1} + B_{j-2} + C_{j-3} + {w_{j-3}}, where the
    w-list enumerates A_1, B_1, A_2. With ``split`` each of A_j, B_j, C_j
    induces two disjoint cliques of near-equal size instead of one.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    a, b, c = layer_sizes(k)
    l = 3 + 2 * a + b
    V = [tuple(range(k))]
    A, B, C = [()], [()], [()]
    nxt = k
    for _ in range(l):
        block = tuple(range(nxt, nxt + k - 1))
        nxt += k - 1
        V.append(block)
        A.append(block[:a])
        B.append(block[a:a + b])
        C.append(block[a + b:])
    w_list = A[1] + B[1] + A[2]
    W = [()]
    for j in range(1, l + 1):
        W.append(V[0] if j <= 3 else vertex_set(A[j - 1] + B[j - 2] + C[j - 3] + (w_list[j - 4],)))
    edges = set()
    for j in range(1, l + 1):
        cut_pairs = set()
        if split:
            for part in (A[j], B[j], C[j]):
                left, right = _halves(part)
                cut_pairs.update((x, y) for x in left for y in right)
        block = V[j]
        for i, x in enumerate(block):
            for y in block[i + 1:]:
                if (x, y) not in cut_pairs:
                    edges.add((x, y))
        edges.update((min(x, w), max(x, w)) for x in block for w in W[j])
    X = vertex_set(C[l - 2] + B[l - 1] + C[l - 1] + V[l])
    layout = Thm2Layout(k, a, b, c, l, V, A, B, C, W, w_list, X, (), split)
    return Graph(nxt, tuple(edges)), layout


@dataclass
class GlueSeriesState:
    step: int
    graph: Graph
    X: VertexSet
    Y: VertexSet


@dataclass
class GlueSeries:
    graph: Graph
    states: list[GlueSeriesState] = field(default_factory=list)
    layout: Thm2Layout | None = None

    @property
    def copies(self) -> int:
        return 2 ** (len(self.states) - 1)

    def x_sizes(self) -> list[int]:
        return [len(s.X) for s in self.states]


def glue_series(base: Graph, X0: VertexSet, k: int, degree_floor: int | None,
                first_y: VertexSet | None = None) -> GlueSeries:
    """Repeatedly glue a copy of the current graph onto itself along Y_j ⊆ X_j.

    Y_j is the lowest |Y_j| = min(k, |X_j|) ids of X_j (or ``first_y`` in the
    first round); the copy shares exactly Y_j, and the unshared rest of X_j
    together with its copy becomes X_{j+1}. Stops once X_j is empty and
    checks the final minimum degree against ``degree_floor``.
    """
    graph, X = base, vertex_set(X0)
    series = GlueSeries(graph)
    step = 0
    while X:
        if step == 0 and first_y is not None:
            Y = vertex_set(first_y)
            if not set(Y) <= set(X):
                raise ValueError("first_y must lie inside X0")
        else:
            Y = X[: min(k, len(X))]
        series.states.append(GlueSeriesState(step, graph, X, Y))
        pairs = [(y, y) for y in Y]
        pos = glue_embedding(graph, graph, pairs)
        rest = [x for x in X if x not in set(Y)]
        graph = glue(graph, graph, pairs)
        X = vertex_set(rest + [pos[x] for x in rest])
        step += 1
    series.states.append(GlueSeriesState(step, graph, (), ()))
    series.graph = graph
    if degree_floor is not None and graph.n and min(graph.degrees) < degree_floor:
        raise RuntimeError(f"glue series ended with min degree {min(graph.degrees)} < {degree_floor}")
    return series


def thm2_series(k: int) -> GlueSeries:
    """Minimum degree >= 3k-3 and no (k+1)-connected subgraph on > ceil(4k/3) vertices."""
    base, layout = thm2_base(k)
    X = list(layout.X)
    outside = [v for v in range(base.n) if v not in set(X)]
    pad = outside[: max(0, 2 * k - 1 - len(X))]
    layout.padding = tuple(pad)
    series = glue_series(base, vertex_set(X + pad), k, 3 * k - 3)
    series.layout = layout
    return series


def thm2_variant(k: int) -> GlueSeries:
    """Split-clique variant with no (k+1)-connected subgraph at all.

    The first gluing is along V_l; the achieved minimum degree is reported
    on the result rather than enforced.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    base, layout = thm2_base(k, split=True)
    series = glue_series(base, layout.X, k, None, first_y=layout.V[layout.l])
    series.layout = layout
    return series


def bipartite_series(k: int) -> GlueSeries:
    """Copies of K_{k,2k-1} glued along the large side: bipartite, min degree >= 2k-1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    base = build_basic("complete_bipartite", [k, 2 * k - 1])
    return glue_series(base, tuple(range(k, 3 * k - 1)), k, 2 * k - 1)


@dataclass
class Thm6State:
    step: int
    graph: Graph
    A: VertexSet
    k: int
    C: int


@dataclass
class Thm6Result:
    graph: Graph
    states: list[Thm6State]
    cross_cuts: list[int]
    halves: list[tuple[VertexSet, VertexSet]]


def thm6_parameters_ok(k: int, C: int) -> bool:
    r = math.isqrt(k)
    return C >= 1 and r * r == k and r % (2 * C) == 0 and 2 ** (2 * C * C) * C <= r


def thm6_construction(k: int, C: int) -> Thm6Result:
    """Minimum degree >= k + C*sqrt(k) without a (k+1)-edge-connected subgraph.

    G_0 is a k-clique joined to an anticlique A_0 of C*sqrt(k)+1 vertices.
    Each round adds an anticlique B_j of sqrt(k)/(2C) vertices joined to all
    of A_j and to the k-|A_j| lowest other ids, doubles the graph, and links
    the halves by C*sqrt(k) edges per B-vertex: k crossing edges in total.
    """
    if not thm6_parameters_ok(k, C):
        raise ValueError(
            f"(k={k}, C={C}) needs k a perfect square, sqrt(k)/(2C) integral and 2^(2C^2)*C <= sqrt(k)"
        )
    r = math.isqrt(k)
    width = C * r
    nb = r // (2 * C)
    n0 = k + width + 1
    A = tuple(range(width + 1))
    edges = [(u, v) for u in A for v in range(width + 1, n0)]
    edges += [(u, v) for u in range(width + 1, n0) for v in range(u + 1, n0)]
    graph = Graph(n0, tuple(edges))
    states = [Thm6State(0, graph, A, k, C)]
    cross_cuts, halves = [], []
    for j in range(2 * C * C):
        n = graph.n
        Bj = tuple(range(n, n + nb))
        others = [v for v in range(n) if v not in set(A)][: k - len(A)]
        h_edges = list(graph.edges)
        for b in Bj:
            h_edges += [(b, x) for x in A]
            h_edges += [(b, x) for x in others]
        size = n + nb
        copy = [(u + size, v + size) for u, v in h_edges]
        targets = list(range(n))
        cross = []
        pointer = 0
        for b in Bj:
            for _ in range(width):
                cross.append((b, targets[pointer % n] + size))
                pointer += 1
        for b in Bj:
            for _ in range(width):
                cross.append((b + size, targets[pointer % n]))
                pointer += 1
        graph = Graph(2 * size, tuple(h_edges + copy + cross))
        halves.append((tuple(range(size)), tuple(range(size, 2 * size))))
        cross_cuts.append(len(cross))
        A = A + tuple(a + size for a in A)
        states.append(Thm6State(j + 1, graph, A, k, C))
    return Thm6Result(graph, states, cross_cuts, halves)
