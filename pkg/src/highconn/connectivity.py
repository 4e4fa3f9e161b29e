"""Exact vertex and edge connectivity with separator / cut witnesses.

Vertex connectivity uses unit-capacity augmenting paths on the usual
vertex-split digraph, over the Esfahanian-Hakimi pair scheme: a fixed
minimum-degree vertex ``v`` against each of its non-neighbours, plus every
non-adjacent pair of neighbours of ``v``. Edge connectivity is Stoer-Wagner
on the multiplicity-weighted simple graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Edge, Graph, VertexSet, components, vertex_set


@dataclass(frozen=True)
class Separation:
    """``separator`` disconnects ``side_a`` from ``side_b``."""

    separator: VertexSet
    side_a: VertexSet
    side_b: VertexSet

    @property
    def order(self) -> int:
        return len(self.separator)


@dataclass(frozen=True)
class EdgeCut:
    """All edges between ``side_a`` and ``side_b`` (with multiplicity)."""

    edges: tuple[Edge, ...]
    side_a: VertexSet
    side_b: VertexSet

    @property
    def size(self) -> int:
        return len(self.edges)


_INF = 1 << 30


class _SplitNetwork:
    """Vertex-split residual network: ``2v`` is v-in, ``2v+1`` is v-out."""

    def __init__(self, g: Graph):
        self.size = 2 * g.n
        self.head: list[int] = []
        self.cap0: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(self.size)]
        for v in range(g.n):
            self._arc(2 * v, 2 * v + 1, 1)
        for u in range(g.n):
            for w in g.adjacency[u]:
                if u < w:
                    self._arc(2 * u + 1, 2 * w, _INF)
                    self._arc(2 * w + 1, 2 * u, _INF)

    def _arc(self, a: int, b: int, cap: int) -> None:
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap0.append(cap)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap0.append(0)

    def local_cut(self, s: int, t: int, limit: int) -> tuple[int, VertexSet | None]:
        """Max number of internally disjoint s-t paths, stopping at ``limit``.

        ``s`` and ``t`` must be non-adjacent. When fewer than ``limit`` paths
        exist, also returns the minimum separator closest to ``s``.
        """
        cap = self.cap0.copy()
        head, out = self.head, self.out
        src, dst = 2 * s + 1, 2 * t
        flow = 0
        while True:
            parent = [-1] * self.size
            parent[src] = -2
            queue = deque([src])
            found = False
            while queue and not found:
                x = queue.popleft()
                for a in out[x]:
                    if cap[a] > 0:
                        y = head[a]
                        if parent[y] == -1:
                            parent[y] = a
                            if y == dst:
                                found = True
                                break
                            queue.append(y)
            if not found:
                reach = parent
                sep = [v for v in range(self.size // 2)
                       if reach[2 * v] != -1 and reach[2 * v + 1] == -1]
                return flow, vertex_set(sep)
            flow += 1
            y = dst
            while y != src:
                a = parent[y]
                cap[a] -= 1
                cap[a ^ 1] += 1
                y = head[a ^ 1]
            if flow >= limit:
                return flow, None


def _candidate_pairs(g: Graph):
    adj = g.adjacency
    v = min(range(g.n), key=lambda x: (len(adj[x]), x))
    for w in range(g.n):
        if w != v and w not in adj[v]:
            yield v, w
    nbrs = sorted(adj[v])
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if y not in adj[x]:
                yield x, y


def separation_from_separator(g: Graph, separator: VertexSet) -> Separation:
    """Split ``g - separator`` into the component of the lowest id versus the rest."""
    sep = set(separator)
    comps = components(g, (v for v in range(g.n) if v not in sep))
    if len(comps) < 2:
        raise ValueError(f"{separator} does not separate the graph")
    rest = vertex_set(v for c in comps[1:] for v in c)
    return Separation(vertex_set(separator), comps[0], rest)


def find_separator(g: Graph, k: int) -> Separation | None:
    """Some separation of order at most ``k``, or None if none exists.

    Complete graphs have no separation at all. Disconnected graphs return the
    empty separator.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    comps = components(g)
    if len(comps) > 1:
        return separation_from_separator(g, ())
    if g.is_complete():
        return None
    net = _SplitNetwork(g)
    for s, t in _candidate_pairs(g):
        flow, sep = net.local_cut(s, t, k + 1)
        if sep is not None:
            return separation_from_separator(g, sep)
    return None


def vertex_connectivity(g: Graph) -> tuple[int, Separation | None]:
    """Connectivity kappa with a minimum separation; kappa(K_n) = n - 1, no witness."""
    if g.n == 0:
        raise ValueError("vertex connectivity of the empty graph is undefined")
    if g.is_complete():
        return g.n - 1, None
    if len(components(g)) > 1:
        return 0, separation_from_separator(g, ())
    net = _SplitNetwork(g)
    best, best_sep = g.n, None
    for s, t in _candidate_pairs(g):
        flow, sep = net.local_cut(s, t, best)
        if sep is not None:
            best, best_sep = flow, sep
    assert best_sep is not None
    return best, separation_from_separator(g, best_sep)


def is_k_plus_1_connected(g: Graph, k: int) -> bool:
    """(k+1)-connected in the strict sense: at least k+2 vertices and kappa >= k+1."""
    if g.n < k + 2:
        return False
    if min(len(nb) for nb in g.adjacency) < k + 1:
        return False
    return find_separator(g, k) is None


def stoer_wagner(g: Graph) -> tuple[int, VertexSet]:
    """Global minimum cut weight (multiplicities as weights) and one side of it."""
    if g.n < 2:
        raise ValueError("minimum cut needs at least two vertices")
    weight = [dict(nb) for nb in g.adjacency]
    groups: dict[int, list[int]] = {v: [v] for v in range(g.n)}
    active = list(range(g.n))
    best, best_side = None, None
    while len(active) > 1:
        conn = {v: 0 for v in active}
        remaining = set(active)
        order = []
        prev_cut = 0
        nxt = active[0]
        while remaining:
            # maximum-adjacency order; ties go to the earliest active vertex
            if order:
                nxt = max(remaining, key=lambda x: (conn[x], -x))
            prev_cut = conn[nxt]
            remaining.discard(nxt)
            order.append(nxt)
            for x, w in weight[nxt].items():
                if x in remaining:
                    conn[x] += w
        s, t = order[-2], order[-1]
        if best is None or prev_cut < best:
            best, best_side = prev_cut, list(groups[t])
        groups[s].extend(groups.pop(t))
        for x, w in weight[t].items():
            if x == s:
                continue
            weight[s][x] = weight[s].get(x, 0) + w
            weight[x][s] = weight[x].get(s, 0) + w
            del weight[x][t]
        weight[s].pop(t, None)
        weight[t] = {}
        active.remove(t)
    return best, vertex_set(best_side)


def edge_cut_from_side(g: Graph, side: VertexSet) -> EdgeCut:
    """The cut around ``side``; the side holding the lowest id becomes ``side_a``."""
    inside = set(side)
    other = vertex_set(v for v in range(g.n) if v not in inside)
    side = vertex_set(inside)
    if not side or not other:
        raise ValueError("both sides of a cut must be nonempty")
    a, b = (side, other) if side[0] < other[0] else (other, side)
    cut = tuple((u, v) for u, v in g.edges if (u in inside) != (v in inside))
    return EdgeCut(cut, a, b)


def edge_connectivity(g: Graph) -> tuple[int, EdgeCut]:
    """Edge connectivity lambda (multiplicities counted) with a minimum cut."""
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    comps = components(g)
    if len(comps) > 1:
        return 0, edge_cut_from_side(g, comps[0])
    value, side = stoer_wagner(g)
    cut = edge_cut_from_side(g, side)
    assert cut.size == value
    return value, cut


def is_k_plus_1_edge_connected(g: Graph, k: int) -> bool:
    """At least two vertices and lambda >= k+1."""
    if g.n < 2:
        return False
    if min(g.degrees) < k + 1:
        return False
    return edge_connectivity(g)[0] >= k + 1
