"""Undirected multigraphs on dense integer ids, plus builders and gluing."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Sorted, duplicate-free tuple of vertex ids."""
    return tuple(sorted(set(vertices)))


@dataclass(frozen=True)
class Graph:
    """Immutable undirected multigraph on vertices ``0..n-1``.

    Edges are kept in canonical form: every pair is ``(min, max)`` and the
    list is sorted, so two graphs with the same edge multiset compare equal.
    Parallel edges are repeated pairs and are only allowed when ``simple``
    is false.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    simple: bool = True

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        canon = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        if self.simple:
            for a, b in zip(canon, canon[1:]):
                if a == b:
                    raise ValueError(f"duplicate edge {a} in a simple graph")
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        """Per-vertex map neighbour -> edge multiplicity."""
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for u, v in self.edges:
            adj[u][v] = adj[u].get(v, 0) + 1
            adj[v][u] = adj[v].get(u, 0) + 1
        return tuple(adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> set[int]:
        return set(self.adjacency[v])

    def multiplicity(self, u: int, v: int) -> int:
        return self.adjacency[u].get(v, 0)

    def has_parallel_edges(self) -> bool:
        return any(a == b for a, b in zip(self.edges, self.edges[1:]))

    def is_complete(self) -> bool:
        """True when every pair of distinct vertices is adjacent."""
        return all(len(nb) == self.n - 1 for nb in self.adjacency)

    def __repr__(self) -> str:
        kind = "simple" if self.simple else "multi"
        return f"Graph(n={self.n}, e={self.num_edges}, {kind})"


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple[int, ...]
    minimum: int
    average: float


def degree_stats(g: Graph) -> DegreeStats:
    """Degrees with multiplicity; an empty graph has minimum 0 and average 0."""
    if g.n == 0:
        return DegreeStats((), 0, 0.0)
    return DegreeStats(g.degrees, min(g.degrees), 2 * g.num_edges / g.n)


def is_triangle_free(g: Graph) -> bool:
    adj = g.adjacency
    for u, v in set(g.edges):
        small, big = (adj[u], adj[v]) if len(adj[u]) <= len(adj[v]) else (adj[v], adj[u])
        if any(w in big for w in small):
            return False
    return True


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def components(g: Graph, within: Iterable[int] | None = None) -> list[VertexSet]:
    """Connected components of ``g[within]``, ordered by their smallest id."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for root in sorted(allowed):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(vertex_set(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Subgraph induced by ``vertices``, renumbered ``0..|S|-1``.

    Returns the subgraph and the translation table: ``table[i]`` is the id in
    ``g`` of the subgraph's vertex ``i``.
    """
    table = vertex_set(vertices)
    for v in table:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for graph on {g.n} vertices")
    index = {v: i for i, v in enumerate(table)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(table), tuple(edges), g.simple), table


def remove_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, VertexSet]:
    gone = set(removed)
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def count_edges_within(g: Graph, vertices: Iterable[int]) -> int:
    inside = set(vertices)
    return sum(1 for u, v in g.edges if u in inside and v in inside)


class GlueError(ValueError):
    """The identified vertex sets do not induce identical subgraphs."""


def _check_glue_map(g: Graph, h: Graph, pairs: Sequence[tuple[int, int]]) -> None:
    firsts = [a for a, _ in pairs]
    seconds = [b for _, b in pairs]
    if len(set(firsts)) != len(firsts) or len(set(seconds)) != len(seconds):
        raise GlueError("glue map is not injective")
    for a, b in pairs:
        if not (0 <= a < g.n and 0 <= b < h.n):
            raise GlueError(f"glue pair ({a}, {b}) out of range")
    for i, (a, b) in enumerate(pairs):
        for c, d in pairs[i + 1:]:
            if g.multiplicity(a, c) != h.multiplicity(b, d):
                raise GlueError(
                    f"overlap mismatch: {a}-{c} has multiplicity {g.multiplicity(a, c)} "
                    f"but {b}-{d} has {h.multiplicity(b, d)}"
                )


def glue_embedding(g: Graph, h: Graph, pairs: Sequence[tuple[int, int]]) -> list[int]:
    """Where each vertex of ``h`` lands in ``glue(g, h, pairs)``.

    Identified vertices keep their id in ``g``; the remaining vertices of
    ``h`` are appended after ``g``'s vertices in increasing order.
    """
    identified = {b: a for a, b in pairs}
    pos = []
    nxt = g.n
    for v in range(h.n):
        if v in identified:
            pos.append(identified[v])
        else:
            pos.append(nxt)
            nxt += 1
    return pos


def glue(g: Graph, h: Graph, pairs: Sequence[tuple[int, int]]) -> Graph:
    """Union of ``g`` and ``h`` with the vertex pairs ``(a in g, b in h)`` identified.

    The identified sets must induce the same (multi)graph under the map.
    Edges of that shared part are taken once, so an identified vertex ``y``
    ends with degree ``d_g(y) + d_h(y) - d_overlap(y)``.
    """
    pairs = [(int(a), int(b)) for a, b in pairs]
    _check_glue_map(g, h, pairs)
    pos = glue_embedding(g, h, pairs)
    shared = {b for _, b in pairs}
    extra = [(pos[u], pos[v]) for u, v in h.edges if not (u in shared and v in shared)]
    n = g.n + h.n - len(pairs)
    return Graph(n, g.edges + tuple(extra), g.simple and h.simple)


def build_basic(kind: str, sizes: Sequence[int]) -> Graph:
    """Standard building blocks with canonical numbering.

    ``complete [n]``, ``anticlique [n]``, ``complete_bipartite [p, q]`` (side
    ``0..p-1`` first), ``cycle [n]`` and ``circulant [n, d1, d2, ...]``.
    """
    sizes = [int(s) for s in sizes]
    if any(s < 0 for s in sizes):
        raise ValueError(f"negative size in {sizes}")
    if kind == "complete":
        (n,) = sizes
        return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))
    if kind == "anticlique":
        (n,) = sizes
        return Graph(n)
    if kind == "complete_bipartite":
        p, q = sizes
        return Graph(p + q, tuple((u, p + v) for u in range(p) for v in range(q)))
    if kind == "cycle":
        (n,) = sizes
        if n in (1, 2):
            raise ValueError("a simple cycle needs at least 3 vertices")
        return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if kind == "circulant":
        n, *offsets = sizes
        edges = set()
        for i in range(n):
            for d in offsets:
                j = (i + d) % n
                if j != i:
                    edges.add((min(i, j), max(i, j)))
        return Graph(n, tuple(edges))
    raise ValueError(f"unknown graph kind {kind!r}")

