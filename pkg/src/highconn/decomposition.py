"""Splitting a graph into two highly (edge-)connected parts.

Pipeline: a degree-constrained bipartition, a highly connected subgraph
inside each side, then Thomassen's absorption loop that grows the two
subgraphs until they cover every vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .connectivity import (
    edge_connectivity,
    find_separator,
    is_k_plus_1_connected,
    is_k_plus_1_edge_connected,
)
from .extraction import dense_extract, find_vertex_connected_subgraph
from .graph import Graph, VertexSet, components, induced_subgraph, is_triangle_free, vertex_set

EXHAUSTIVE_LIMIT = 20


class DecompositionError(RuntimeError):
    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.message = message


@dataclass
class PartitionWitness:
    A: VertexSet
    B: VertexSet
    mode: str = "degree"
    params: dict = field(default_factory=dict)
    properties: dict = field(default_factory=dict)
    history: list[int] = field(default_factory=list)


def _side_degrees(g: Graph, side: set[int]) -> dict[int, int]:
    return {v: sum(m for w, m in g.adjacency[v].items() if w in side) for v in side}


def _exhaustive_partition(g: Graph, dA: int, dB: int) -> tuple[set[int], set[int]] | None:
    n = g.n
    full = (1 << n) - 1
    if g.simple and not g.has_parallel_edges():
        nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
        bits = [1 << v for v in range(n)]
        for mask in range(1, full):
            other = full ^ mask
            ok = True
            for v in range(n):
                if mask & bits[v]:
                    if (nbr[v] & mask).bit_count() < dA:
                        ok = False
                        break
                elif (nbr[v] & other).bit_count() < dB:
                    ok = False
                    break
            if ok:
                a = {v for v in range(n) if mask >> v & 1}
                return a, set(range(n)) - a
        return None
    for mask in range(1, full):
        a = {v for v in range(n) if mask >> v & 1}
        b = set(range(n)) - a
        if min(_side_degrees(g, a).values()) >= dA and min(_side_degrees(g, b).values()) >= dB:
            return a, b
    return None


def _local_search(g: Graph, dA: int, dB: int, seed: int, restarts: int = 50):
    rng = random.Random(seed)
    n = g.n
    for _ in range(restarts):
        a = {v for v in range(n) if rng.random() < 0.5}
        for _ in range(20 * n):
            b = set(range(n)) - a
            if not a or not b:
                break
            da, db = _side_degrees(g, a), _side_degrees(g, b)
            bad = [v for v in sorted(a) if da[v] < dA] + [v for v in sorted(b) if db[v] < dB]
            if not bad:
                return a, b
            v = rng.choice(bad)
            if v in a:
                a.discard(v)
            else:
                a.add(v)
    return None


def degree_partition(g: Graph, dA: int, dB: int, seed: int = 0) -> PartitionWitness | None:
    """Bipartition with min degree >= dA inside A and >= dB inside B, or None.

    Exhaustive (first bipartition in mask order) up to 20 vertices, seeded
    local search with restarts beyond that. None from the local search does
    not prove that no such partition exists.
    """
    if g.n < 2:
        return None
    if g.n <= EXHAUSTIVE_LIMIT:
        found = _exhaustive_partition(g, dA, dB)
        method = "exhaustive"
    else:
        found = _local_search(g, dA, dB, seed)
        method = "local_search"
    if found is None:
        return None
    a, b = found
    da, db = _side_degrees(g, a), _side_degrees(g, b)
    assert min(da.values()) >= dA and min(db.values()) >= dB
    return PartitionWitness(
        vertex_set(a), vertex_set(b), "degree", {"dA": dA, "dB": dB},
        {"min_degree_A": min(da.values()), "min_degree_B": min(db.values()), "method": method},
    )


def _part_ok(g: Graph, part, k: int, mode: str) -> bool:
    sub, _ = induced_subgraph(g, part)
    if mode == "edge":
        return is_k_plus_1_edge_connected(sub, k)
    return is_k_plus_1_connected(sub, k)


def _host_ok(g: Graph, r: int, mode: str) -> bool:
    return _part_ok(g, range(g.n), r - 1, mode)


def thomassen_extend(g: Graph, A, B, s: int, t: int, mode: str = "vertex") -> PartitionWitness:
    """Grow disjoint A, B until they partition V(G), keeping G[A] (s+1)- and G[B] (t+1)-connected.

    Each round either absorbs all leftover vertices X into A, or finds a
    small separator (``mode="vertex"``) or edge cut (``mode="edge"``) of
    G[A ∪ X] and moves a piece of X avoiding A into B. ``history`` records
    |X| before each round and is strictly decreasing.
    """
    if mode not in ("vertex", "edge"):
        raise ValueError(f"unknown mode {mode!r}")
    A, B = set(A), set(B)
    if not A or not B or A & B:
        raise DecompositionError("absorption", "A and B must be nonempty and disjoint")
    if not _part_ok(g, A, s, mode) or not _part_ok(g, B, t, mode):
        raise DecompositionError("absorption", "G[A] or G[B] is not connected enough on entry")
    if not _host_ok(g, s + t + 1, mode):
        raise DecompositionError(
            "absorption", f"precondition violated: G is not ({s + t + 1})-{'edge-' if mode == 'edge' else ''}connected"
        )
    X = set(range(g.n)) - A - B
    history = [len(X)]
    while X:
        ax = vertex_set(A | X)
        sub, table = induced_subgraph(g, ax)
        if mode == "vertex":
            # |A| >= s+2, so no separation of order <= s means (s+1)-connected
            sep = find_separator(sub, s)
            if sep is None:
                A |= X
                X = set()
                history.append(0)
                break
            S = {table[i] for i in sep.separator}
            pieces = [c for c in components(g, set(ax) - S) if not A.intersection(c)]
        else:
            value, cut = edge_connectivity(sub)
            if value > s:
                A |= X
                X = set()
                history.append(0)
                break
            sides = [{table[i] for i in cut.side_a}, {table[i] for i in cut.side_b}]
            pieces = [vertex_set(side) for side in sides if not A & side]
        if not pieces:
            raise DecompositionError("absorption", "no piece of X avoids A; G[A] lost its connectivity")
        Y = set(min(pieces, key=lambda c: c[0]))
        assert Y and Y <= X
        B |= Y
        X -= Y
        if not _part_ok(g, B, t, mode):
            raise DecompositionError(
                "absorption", "precondition violated: G[B ∪ Y] is not connected enough after absorbing Y"
            )
        assert len(X) < history[-1]
        history.append(len(X))
    witness = PartitionWitness(vertex_set(A), vertex_set(B), mode, {"s": s, "t": t}, {}, history)
    witness.properties = verify_partition(g, witness, s, t, mode)
    return witness


def verify_partition(g: Graph, w: PartitionWitness, s: int, t: int, mode: str,
                     min_sizes: tuple[int, int] = (0, 0)) -> dict:
    """Re-check a two-part decomposition; raises DecompositionError on failure."""
    A, B = set(w.A), set(w.B)
    if not A or not B or A & B or (A | B) != set(range(g.n)):
        raise DecompositionError("verify", "A and B do not partition V(G)")
    if len(A) <= min_sizes[0] or len(B) <= min_sizes[1]:
        raise DecompositionError("verify", f"part sizes {len(A)}, {len(B)} too small")
    ok_a, ok_b = _part_ok(g, A, s, mode), _part_ok(g, B, t, mode)
    if not (ok_a and ok_b):
        raise DecompositionError("verify", "a part is not connected enough")
    kind = "edge-connected" if mode == "edge" else "connected"
    return {"A": f"{s + 1}-{kind}", "B": f"{t + 1}-{kind}", "size_A": len(A), "size_B": len(B)}


def decompose_vertex(g: Graph, s: int, t: int, triangle_free: bool = False,
                     seed: int = 0) -> PartitionWitness:
    """Partition V(G) into A, B with G[A] (s+1)-connected and G[B] (t+1)-connected.

    Without ``triangle_free`` the parts also satisfy |A| > 2s and |B| > 2t.
    Stage failures raise DecompositionError tagged with the stage name.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be at least 1")
    if triangle_free:
        if not is_triangle_free(g):
            raise DecompositionError("degree_partition", "graph is not triangle-free")
        need, dA, dB = 2 * s + 2 * t, 2 * s, 2 * t
        sizes = (2 * s + 1, 2 * t + 1)
    else:
        need, dA, dB = 3 * s + 3 * t - 1, 3 * s - 1, 3 * t - 1
        sizes = (2 * s, 2 * t)
    low = min(g.degrees) if g.n else 0
    if low < need:
        raise DecompositionError("degree_partition", f"hypotheses unmet: min degree {low} < {need}")
    split = degree_partition(g, dA, dB, seed)
    if split is None:
        raise DecompositionError("degree_partition", f"no bipartition with inner degrees {dA}/{dB} found")
    cores = []
    for part, k, size in ((split.A, s, sizes[0]), (split.B, t, sizes[1])):
        sub, table = induced_subgraph(g, part)
        res = find_vertex_connected_subgraph(sub, k, size)
        if not res.found:
            raise DecompositionError("extraction", f"no {k + 1}-connected subgraph on > {size} vertices")
        cores.append([table[i] for i in res.witness])
    w = thomassen_extend(g, cores[0], cores[1], s, t, "vertex")
    w.params = {"s": s, "t": t, "triangle_free": triangle_free}
    w.properties = verify_partition(g, w, s, t, "vertex", (2 * s, 2 * t) if not triangle_free else (0, 0))
    return w


def edge_degree_threshold(r: int, g=lambda k: 2 * k) -> int:
    """f(r) = max{ g(r - s) + g(s) + 1 : 1 <= s <= r/2 }."""
    options = [g(r - s) + g(s) + 1 for s in range(1, r // 2 + 1)]
    if not options:
        raise ValueError("r must be at least 2")
    return max(options)


def decompose_edge(g: Graph, s: int, t: int, seed: int = 0) -> PartitionWitness:
    """Partition V(G) into A, B with G[A] (s+1)- and G[B] (t+1)-edge-connected."""
    if s < 1 or t < 1:
        raise ValueError("s and t must be at least 1")
    need = edge_degree_threshold(s + t)
    low = min(g.degrees) if g.n else 0
    if low < need:
        raise DecompositionError("degree_partition", f"hypotheses unmet: min degree {low} < f({s + t}) = {need}")
    split = degree_partition(g, 2 * s, 2 * t, seed)
    if split is None:
        raise DecompositionError("degree_partition", f"no bipartition with inner degrees {2 * s}/{2 * t} found")
    cores = []
    for part, k in ((split.A, s), (split.B, t)):
        sub, table = induced_subgraph(g, part)
        try:
            found = dense_extract(sub, k)
        except ValueError as exc:
            raise DecompositionError("extraction", str(exc)) from None
        cores.append([table[i] for i in found.vertices])
    w = thomassen_extend(g, cores[0], cores[1], s, t, "edge")
    w.params = {"s": s, "t": t}
    w.properties = verify_partition(g, w, s, t, "edge")
    return w
