"""Finding highly (edge-)connected subgraphs, or certifying that none exist.

Both searches peel vertices of degree at most k, then either accept the
remaining core or split it along a small separation / edge cut and recurse.
A (k+1)-connected subgraph cannot straddle a separation of order <= k, and a
(k+1)-edge-connected one cannot straddle a cut of <= k edges, so the
recursion is exhaustive. Every failed search returns a replayable trace.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .connectivity import EdgeCut, Separation, edge_connectivity, find_separator
from .graph import Graph, VertexSet, count_edges_within, induced_subgraph, vertex_set
from .packing import pack_spanning_trees

DEFAULT_BUDGET = 10**6

TOO_FEW = "too_few_vertices"
LOW_DEGREE = "min_degree_too_low"
EXHAUSTED = "exhausted"


class BudgetExceeded(RuntimeError):
    """The subproblem budget ran out before the search finished.

    This says nothing about existence; it is not a nonexistence verdict.
    """


class TraceError(ValueError):
    """A nonexistence trace failed to replay."""


@dataclass(frozen=True)
class PeelResult:
    sequence: tuple[int, ...]
    core: Graph
    core_vertices: VertexSet

    @property
    def z(self) -> int:
        return len(self.sequence)


def _peel_set(g: Graph, vertices: Iterable[int], k: int) -> tuple[list[int], set[int]]:
    alive = set(vertices)
    adj = g.adjacency
    deg = {v: sum(m for w, m in adj[v].items() if w in alive) for v in alive}
    queue = deque(v for v in sorted(alive) if deg[v] <= k)
    queued = set(queue)
    order = []
    while queue:
        v = queue.popleft()
        alive.discard(v)
        order.append(v)
        for w, m in adj[v].items():
            if w in alive:
                deg[w] -= m
                if deg[w] <= k and w not in queued:
                    queued.add(w)
                    queue.append(w)
    return order, alive


def peel(g: Graph, k: int) -> PeelResult:
    """Repeatedly delete a vertex of degree <= k (FIFO order).

    The remainder is the (k+1)-core, which does not depend on the order; the
    number of deleted vertices is the longest detachable sequence length z.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    order, alive = _peel_set(g, range(g.n), k)
    core, table = induced_subgraph(g, alive)
    return PeelResult(tuple(order), core, table)


@dataclass
class TraceNode:
    vertices: VertexSet
    peeled: tuple[int, ...] = ()
    verdict: str | None = None
    split: Separation | EdgeCut | None = None
    children: list["TraceNode"] = field(default_factory=list)

    def core(self) -> set[int]:
        return set(self.vertices).difference(self.peeled)

    def walk(self):
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass
class NonexistenceTrace:
    """Proof that no (k+1)-(edge-)connected subgraph on > min_size vertices exists."""

    mode: str  # "vertex" or "edge"
    k: int
    min_size: int
    root: TraceNode

    def size(self) -> int:
        return sum(1 for _ in self.root.walk())

    def leaf_verdicts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for node in self.root.walk():
            if node.verdict:
                out[node.verdict] = out.get(node.verdict, 0) + 1
        return out


@dataclass
class SearchResult:
    witness: VertexSet | None
    trace: NonexistenceTrace | None
    subproblems: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def _map_separation(sep: Separation, table: VertexSet) -> Separation:
    return Separation(
        tuple(table[i] for i in sep.separator),
        tuple(table[i] for i in sep.side_a),
        tuple(table[i] for i in sep.side_b),
    )


def _map_cut(cut: EdgeCut, table: VertexSet) -> EdgeCut:
    edges = tuple(sorted((table[u], table[v]) for u, v in cut.edges))
    return EdgeCut(edges, tuple(table[i] for i in cut.side_a), tuple(table[i] for i in cut.side_b))


class _VertexSearch:
    def __init__(self, g: Graph, k: int, min_size: int, budget: int):
        self.g, self.k, self.min_size, self.budget = g, k, min_size, budget
        self.count = 0
        self.done: set[frozenset[int]] = set()

    def explore(self, vertices: VertexSet) -> tuple[TraceNode, VertexSet | None]:
        self.count += 1
        if self.count > self.budget:
            raise BudgetExceeded(f"vertex search exceeded {self.budget} subproblems")
        node = TraceNode(vertices)
        if len(vertices) <= self.min_size:
            node.verdict = TOO_FEW
            return node, None
        order, core = _peel_set(self.g, vertices, self.k)
        node.peeled = tuple(order)
        if not core:
            node.verdict = LOW_DEGREE
            return node, None
        if len(core) <= self.min_size:
            node.verdict = TOO_FEW
            return node, None
        key = frozenset(core)
        if key in self.done:
            node.verdict = EXHAUSTED
            return node, None
        sub, table = induced_subgraph(self.g, core)
        sep = find_separator(sub, self.k)
        if sep is None:
            # min degree >= k+1 forces >= k+2 vertices, so no separation means (k+1)-connected
            return node, table
        self.done.add(key)
        sep = _map_separation(sep, table)
        node.split = sep
        for side in (sep.side_a, sep.side_b):
            child, witness = self.explore(vertex_set(side + sep.separator))
            node.children.append(child)
            if witness is not None:
                return node, witness
        return node, None


def find_vertex_connected_subgraph(g: Graph, k: int, min_size: int = 0,
                                   budget: int = DEFAULT_BUDGET) -> SearchResult:
    """A vertex set of size > ``min_size`` inducing a (k+1)-connected subgraph.

    Returns a witness or an exhaustive nonexistence trace. The recursion is
    exponential in the worst case; ``budget`` caps the number of subproblems
    and :class:`BudgetExceeded` is raised when it runs out.
    """
    if k < 0 or min_size < 0:
        raise ValueError("k and min_size must be nonnegative")
    search = _VertexSearch(g, k, min_size, budget)
    root, witness = search.explore(tuple(range(g.n)))
    if witness is not None:
        return SearchResult(witness, None, search.count)
    return SearchResult(None, NonexistenceTrace("vertex", k, min_size, root), search.count)


def find_edge_connected_subgraph(g: Graph, k: int) -> SearchResult:
    """A vertex set inducing a (k+1)-edge-connected subgraph, or a nonexistence trace.

    Cut sides are disjoint, so the total work is polynomial.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    count = 0

    def explore(vertices: VertexSet) -> tuple[TraceNode, VertexSet | None]:
        nonlocal count
        count += 1
        node = TraceNode(vertices)
        order, core = _peel_set(g, vertices, k)
        node.peeled = tuple(order)
        if not core:
            node.verdict = LOW_DEGREE
            return node, None
        sub, table = induced_subgraph(g, core)
        value, cut = edge_connectivity(sub)
        if value >= k + 1:
            return node, table
        cut = _map_cut(cut, table)
        node.split = cut
        for side in (cut.side_a, cut.side_b):
            child, witness = explore(side)
            node.children.append(child)
            if witness is not None:
                return node, witness
        return node, None

    root, witness = explore(tuple(range(g.n)))
    if witness is not None:
        return SearchResult(witness, None, count)
    return SearchResult(None, NonexistenceTrace("edge", k, 0, root), count)


def _replay_peel(g: Graph, node: TraceNode, k: int) -> set[int]:
    alive = set(node.vertices)
    if len(alive) != len(node.vertices) or any(not 0 <= v < g.n for v in alive):
        raise TraceError(f"bad vertex set {node.vertices}")
    adj = g.adjacency
    for v in node.peeled:
        if v not in alive:
            raise TraceError(f"peeled vertex {v} is not present")
        d = sum(m for w, m in adj[v].items() if w in alive)
        if d > k:
            raise TraceError(f"peeled vertex {v} has degree {d} > {k}")
        alive.discard(v)
    return alive


def verify_trace(g: Graph, trace: NonexistenceTrace) -> bool:
    """Replay every step of ``trace`` on ``g``; raise :class:`TraceError` on any flaw.

    Only degree counts and edge adjacency are consulted, never a
    connectivity oracle.
    """
    k, min_size = trace.k, trace.min_size
    if trace.mode not in ("vertex", "edge"):
        raise TraceError(f"unknown trace mode {trace.mode!r}")
    if tuple(trace.root.vertices) != tuple(range(g.n)):
        raise TraceError("trace root must cover the whole graph")
    expanded = set()
    pending_exhausted = []
    stack = [trace.root]
    while stack:
        node = stack.pop()
        core = _replay_peel(g, node, k)
        if node.verdict == LOW_DEGREE:
            if core:
                raise TraceError(f"{len(core)} vertices survive peeling at a low-degree leaf")
            continue
        if node.verdict == TOO_FEW:
            if trace.mode != "vertex" or len(core) > min_size:
                raise TraceError(f"too-few leaf keeps {len(core)} > {min_size} vertices")
            continue
        if node.verdict == EXHAUSTED:
            if trace.mode != "vertex":
                raise TraceError("exhausted leaves only occur in vertex traces")
            pending_exhausted.append(frozenset(core))
            continue
        if node.verdict is not None:
            raise TraceError(f"unknown verdict {node.verdict!r}")
        if len(node.children) != 2 or node.split is None:
            raise TraceError("internal trace node needs a split and two children")
        if trace.mode == "vertex":
            targets = _check_separation(g, node.split, core, k)
        else:
            targets = _check_cut(g, node.split, core, k)
        for child, want in zip(node.children, targets):
            if set(child.vertices) != want:
                raise TraceError("child vertex set does not match its split side")
        expanded.add(frozenset(core))
        stack.extend(node.children)
    for key in pending_exhausted:
        if key not in expanded:
            raise TraceError("exhausted leaf refers to a subproblem never expanded")
    return True


def _check_separation(g: Graph, sep, core: set[int], k: int):
    if not isinstance(sep, Separation):
        raise TraceError("vertex trace split must be a separation")
    s, a, b = set(sep.separator), set(sep.side_a), set(sep.side_b)
    if len(s) > k:
        raise TraceError(f"separator of order {len(s)} > {k}")
    if not a or not b or s & a or s & b or a & b or (s | a | b) != core:
        raise TraceError("separation does not partition the core")
    for v in a:
        if any(w in b for w in g.adjacency[v]):
            raise TraceError(f"edge from {v} crosses the separation")
    return a | s, b | s


def _check_cut(g: Graph, cut, core: set[int], k: int):
    if not isinstance(cut, EdgeCut):
        raise TraceError("edge trace split must be an edge cut")
    a, b = set(cut.side_a), set(cut.side_b)
    if not a or not b or a & b or (a | b) != core:
        raise TraceError("cut sides do not partition the core")
    crossing = sorted(e for e in g.edges if (e[0] in a and e[1] in b) or (e[0] in b and e[1] in a))
    if len(crossing) > k:
        raise TraceError(f"cut has {len(crossing)} > {k} edges")
    if crossing != sorted(tuple(sorted(e)) for e in cut.edges):
        raise TraceError("listed cut edges differ from the crossing edges")
    return a, b


@dataclass(frozen=True)
class DenseExtraction:
    vertices: VertexSet
    subgraph: Graph
    trees: tuple
    steps: tuple[tuple[str, VertexSet], ...]


def _density_ok(g: Graph, part, k: int) -> bool:
    return count_edges_within(g, part) > k * (len(part) - 1)


def dense_extract(g: Graph, k: int) -> DenseExtraction:
    """Shrink to an induced subgraph G' with e(G') > k(v(G') - 1) and no sparse partition.

    While some partition P of the current vertex set has at most k(|P|-1)
    crossing edges (a cut of <= k edges, or a violator from the tree packing),
    some class still satisfies the density condition and we move into it.
    The result is (k+1)-edge-connected, packs k spanning trees, and has more
    than 2k vertices when ``g`` is simple.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.num_edges <= k * (g.n - 1):
        raise ValueError(
            f"precondition e(G) > k(v(G)-1) fails: {g.num_edges} <= {k * (g.n - 1)}"
        )
    current: VertexSet = tuple(range(g.n))
    steps = []
    while True:
        sub, table = induced_subgraph(g, current)
        value, cut = edge_connectivity(sub)
        if value <= k:
            parts, reason = [cut.side_a, cut.side_b], "cut"
        else:
            packing = pack_spanning_trees(sub, k)
            if packing.success:
                trees = tuple(tuple((table[u], table[v]) for u, v in t) for t in packing.trees)
                return DenseExtraction(current, sub, trees, tuple(steps))
            parts, reason = list(packing.partition), "partition"
        parts = [tuple(table[i] for i in p) for p in parts]
        dense = [p for p in parts if _density_ok(g, p, k)]
        assert dense, "density lemma violated"
        current = min(dense, key=lambda p: (len(p), p[0]))
        steps.append((reason, current))
