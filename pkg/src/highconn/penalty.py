"""Degree-deficit penalty functionals and numeric checks of the two removal lemmas.

Vertex variant: each vertex pays ``clamp((3k-1) - deg, 0, k)`` and M(G) is the
plain sum. Edge variant: each vertex pays ``clamp((k+m) - deg, 0, m)`` and
M(G) is the largest weighted sum over all vertex orderings with weights
``alpha * j**(alpha-1)``, j = 1, 2, ...
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .connectivity import EdgeCut
from .graph import Graph, induced_subgraph, remove_vertices

TOLERANCE = 1e-9


@dataclass(frozen=True)
class PenaltyParams:
    k: int
    m: float
    alpha: float

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if not 0 <= self.m <= self.k:
            raise ValueError(f"m={self.m} outside [0, k={self.k}]")
        if not 0 < self.alpha < 0.5:
            raise ValueError(f"alpha={self.alpha} outside (0, 1/2)")

    @classmethod
    def default(cls, k: int, alpha: float) -> "PenaltyParams":
        """m = k^(1/2 + alpha)."""
        return cls(k, k ** (0.5 + alpha), alpha)


@dataclass(frozen=True)
class PenaltyProfile:
    values: tuple[float, ...]
    total: float


def _clamp(x: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, x))


def vertex_penalty(degree: int, k: int) -> int:
    return int(_clamp(3 * k - 1 - degree, 0, k))


def edge_penalty(degree: float, k: int, m: float) -> float:
    return _clamp(k + m - degree, 0.0, m)


def vertex_penalty_total(g: Graph, k: int) -> PenaltyProfile:
    if k < 1:
        raise ValueError("k must be at least 1")
    values = tuple(vertex_penalty(d, k) for d in g.degrees)
    return PenaltyProfile(values, sum(values))


def edge_penalty_profile(g: Graph, p: PenaltyParams) -> PenaltyProfile:
    """Per-vertex edge penalties; ``total`` is the plain sum, not the weighted M."""
    values = tuple(edge_penalty(d, p.k, p.m) for d in g.degrees)
    return PenaltyProfile(values, sum(values))


def weights(count: int, alpha: float) -> list[float]:
    return [alpha * j ** (alpha - 1) for j in range(1, count + 1)]


def weighted_sum(values, alpha: float) -> float:
    return sum(w * x for w, x in zip(weights(len(values), alpha), values))


def weighted_penalty(g: Graph, p: PenaltyParams) -> float:
    """Max over vertex orderings of the weighted penalty sum.

    Weights decrease, so by the rearrangement inequality the best ordering
    lists penalties in decreasing order.
    """
    if g.n == 0:
        raise ValueError("weighted penalty of the empty graph is undefined")
    values = sorted(edge_penalty_profile(g, p).values, reverse=True)
    return weighted_sum(values, p.alpha)


def weight_prefix_sum(l: int, alpha: float) -> float:
    """Sum of the first l weights, checked against l^alpha - 1 <= sum <= l^alpha."""
    if l < 1 or not 0 < alpha < 1:
        raise ValueError("need l >= 1 and 0 < alpha < 1")
    total = math.fsum(weights(l, alpha))
    upper = l ** alpha
    if not upper - 1 - TOLERANCE <= total <= upper + TOLERANCE:
        raise ArithmeticError(f"prefix sum {total} escapes [{upper - 1}, {upper}]")
    return total


@dataclass(frozen=True)
class LemmaCheck:
    holds: bool
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs


def check_lemma_a(g: Graph, w: int, p: PenaltyParams) -> LemmaCheck:
    """M(G) >= M(G - w) - k^alpha for a vertex w of degree <= k in a simple graph."""
    if not g.simple or g.has_parallel_edges():
        raise ValueError("vertex-removal lemma needs a simple graph")
    if g.degree(w) > p.k:
        raise ValueError(f"vertex {w} has degree {g.degree(w)} > k={p.k}")
    if g.n < 2:
        raise ValueError("G - w must be nonempty")
    rest, _ = remove_vertices(g, [w])
    lhs = weighted_penalty(g, p)
    rhs = weighted_penalty(rest, p) - p.k ** p.alpha
    return LemmaCheck(lhs >= rhs - TOLERANCE, lhs, rhs)


def check_lemma_b(g: Graph, cut: EdgeCut, p: PenaltyParams) -> LemmaCheck:
    """M(G) >= 2^(alpha-1) (M(A) + M(B)) - m (4k/m)^alpha for a cut of <= k edges."""
    a, b = set(cut.side_a), set(cut.side_b)
    if not a or not b or a & b or (a | b) != set(range(g.n)):
        raise ValueError("cut sides must partition the vertices")
    crossing = sorted(e for e in g.edges if (e[0] in a) != (e[1] in a))
    if crossing != sorted(cut.edges):
        raise ValueError("cut edges must be exactly the edges between the sides")
    if len(crossing) > p.k:
        raise ValueError(f"cut has {len(crossing)} > k={p.k} edges")
    if p.m <= 0:
        raise ValueError("m must be positive")
    ga, _ = induced_subgraph(g, a)
    gb, _ = induced_subgraph(g, b)
    lhs = weighted_penalty(g, p)
    rhs = 2 ** (p.alpha - 1) * (weighted_penalty(ga, p) + weighted_penalty(gb, p)) \
        - p.m * (4 * p.k / p.m) ** p.alpha
    return LemmaCheck(lhs >= rhs - TOLERANCE, lhs, rhs)
