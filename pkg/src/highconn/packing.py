"""Edge-disjoint spanning tree packing by matroid-union augmentation.

The k forests are grown one edge at a time. An edge that fits in no forest
directly is pushed in along a shortest exchange path (insert it into forest
j, evict the edge of j on the cycle it closes, rehome that edge, ...). When
the union is maximum but short of ``k(n-1)`` edges, the edges reachable from
the leftover edges in the exchange graph span each forest on their own
components, and those components form a partition with fewer than
``k(|P|-1)`` crossing edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Edge, Graph, VertexSet, components, is_connected


@dataclass(frozen=True)
class Packing:
    """Either ``trees`` (k lists of edges) or a violating ``partition``."""

    k: int
    trees: tuple[tuple[Edge, ...], ...] | None
    partition: tuple[VertexSet, ...] | None

    @property
    def success(self) -> bool:
        return self.trees is not None


def cross_edge_count(g: Graph, parts) -> int:
    label = {}
    for i, part in enumerate(parts):
        for v in part:
            label[v] = i
    return sum(1 for u, v in g.edges if label[u] != label[v])


def check_partition_inequality(g: Graph, parts, k: int) -> bool:
    """True iff strictly more than ``k(|P|-1)`` edges cross the partition."""
    parts = [tuple(p) for p in parts]
    if len(parts) < 2:
        raise ValueError("partition needs at least two classes")
    seen: set[int] = set()
    for p in parts:
        if not p:
            raise ValueError("partition classes must be nonempty")
        if seen.intersection(p):
            raise ValueError("partition classes overlap")
        seen.update(p)
    if seen != set(range(g.n)):
        raise ValueError("partition does not cover the vertex set")
    return cross_edge_count(g, parts) > k * (len(parts) - 1)


class _Forests:
    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.home = [-1] * g.num_edges
        self.adj: list[list[dict[int, int]]] = [[{} for _ in range(g.n)] for _ in range(k)]
        self.sizes = [0] * k

    def add(self, e: int, j: int) -> None:
        u, v = self.g.edges[e]
        self.adj[j][u][e] = v
        self.adj[j][v][e] = u
        self.home[e] = j
        self.sizes[j] += 1

    def remove(self, e: int) -> None:
        j = self.home[e]
        u, v = self.g.edges[e]
        del self.adj[j][u][e]
        del self.adj[j][v][e]
        self.home[e] = -1
        self.sizes[j] -= 1

    def path(self, j: int, s: int, t: int) -> list[int] | None:
        """Edge ids on the s-t path of forest j, or None when not connected."""
        if s == t:
            return []
        adj = self.adj[j]
        via = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e, y in adj[x].items():
                if y not in via:
                    via[y] = e
                    if y == t:
                        out = []
                        while y != s:
                            e = via[y]
                            out.append(e)
                            a, b = self.g.edges[e]
                            y = a if b == y else b
                        return out
                    queue.append(y)
        return None

    def augment(self, start: int) -> bool:
        pred = {start: -1}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            u, v = self.g.edges[x]
            for j in range(self.k):
                if j == self.home[x]:
                    continue
                cycle = self.path(j, u, v)
                if cycle is None:
                    self._shift(x, j, pred)
                    return True
                for y in cycle:
                    if y not in pred:
                        pred[y] = x
                        queue.append(y)
        return False

    def _shift(self, last: int, target: int, pred: dict[int, int]) -> None:
        cur = last
        while cur != -1:
            old = self.home[cur]
            if old >= 0:
                self.remove(cur)
            self.add(cur, target)
            target = old
            cur = pred[cur]

    def reachable(self, sources: list[int]) -> set[int]:
        seen = set(sources)
        queue = deque(sources)
        while queue:
            x = queue.popleft()
            u, v = self.g.edges[x]
            for j in range(self.k):
                if j == self.home[x]:
                    continue
                cycle = self.path(j, u, v)
                assert cycle is not None, "union was not maximum"
                for y in cycle:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
        return seen


def pack_spanning_trees(g: Graph, k: int) -> Packing:
    """k edge-disjoint spanning trees of a connected (multi)graph, or a violator.

    A violator is a partition P of the vertices with fewer than ``k(|P|-1)``
    crossing edges, which rules out a packing by the Tutte / Nash-Williams
    theorem.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0 or not is_connected(g):
        raise ValueError("tree packing needs a connected, nonempty graph")
    need = k * (g.n - 1)
    if g.num_edges < need:
        return Packing(k, None, tuple((v,) for v in range(g.n)))
    forests = _Forests(g, k)
    leftover = []
    for e in range(g.num_edges):
        if not forests.augment(e):
            leftover.append(e)
    if sum(forests.sizes) == need:
        trees = tuple(
            tuple(g.edges[e] for e in range(g.num_edges) if forests.home[e] == j)
            for j in range(k)
        )
        return Packing(k, trees, None)
    reach = forests.reachable(leftover)
    span = Graph(g.n, tuple(g.edges[e] for e in sorted(reach)), simple=False)
    parts = tuple(components(span))
    assert cross_edge_count(g, parts) < k * (len(parts) - 1)
    return Packing(k, None, parts)


def verify_tree_packing(g: Graph, trees, k: int) -> bool:
    """Check that ``trees`` are k spanning trees using each edge at most its multiplicity."""
    if len(trees) != k:
        return False
    available: dict[Edge, int] = {}
    for e in g.edges:
        available[e] = available.get(e, 0) + 1
    for tree in trees:
        tree = [tuple(sorted(e)) for e in tree]
        if len(tree) != g.n - 1:
            return False
        for e in tree:
            if available.get(e, 0) == 0:
                return False
            available[e] -= 1
        if not is_connected(Graph(g.n, tuple(tree), simple=False)):
            return False
    return True
