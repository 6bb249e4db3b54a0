"""Degree, betweenness, Katz and Collective Influence scores, unweighted or weighted."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .graph import Graph, WeightMode

KATZ_TOL = 1e-9
KATZ_MAX_SWEEPS = 10_000
EIGEN_TOL = 1e-6
EIGEN_MAX_ITER = 100_000

# scores equal to this many decimals rank as ties (absorbs summation-order noise)
RANK_DECIMALS = 9


class KatzDivergenceError(ArithmeticError):
    """Katz series does not converge for the requested alpha."""

    def __init__(self, alpha: float, bound: float, reason: str):
        super().__init__(f"Katz alpha={alpha} invalid: {reason} (alpha must be < {bound:.6g})")
        self.alpha = alpha
        self.bound = bound


@dataclass(frozen=True)
class Metric:
    """A centrality metric with its parameters.

    Use the constructors ``degree()``, ``betweenness()``, ``katz()`` and
    ``collective_influence()`` rather than building one by hand.
    """

    kind: str
    alpha: float | None = None
    beta: float | None = None
    radius: int | None = None

    KINDS = ("degree", "betweenness", "katz", "ci")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown metric {self.kind!r}; expected one of {self.KINDS}")
        if self.kind == "katz":
            if self.alpha is None or self.beta is None:
                raise ValueError("katz needs alpha and beta")
            if not self.alpha > 0:
                raise ValueError(f"katz alpha must be positive, got {self.alpha}")
        if self.kind == "ci":
            if self.radius is None or isinstance(self.radius, bool) or int(self.radius) != self.radius \
                    or self.radius < 1:
                raise ValueError(f"collective influence radius must be an integer >= 1, got {self.radius}")

    @classmethod
    def degree(cls) -> Metric:
        return cls("degree")

    @classmethod
    def betweenness(cls) -> Metric:
        return cls("betweenness")

    @classmethod
    def katz(cls, alpha: float = 0.1, beta: float = 1.0) -> Metric:
        return cls("katz", alpha=float(alpha), beta=float(beta))

    @classmethod
    def collective_influence(cls, radius: int = 2) -> Metric:
        return cls("ci", radius=radius)

    @property
    def label(self) -> str:
        if self.kind == "katz":
            return f"katz(alpha={self.alpha:g};beta={self.beta:g})"
        if self.kind == "ci":
            return f"ci(radius={self.radius})"
        return self.kind

    def as_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "katz":
            d.update(alpha=self.alpha, beta=self.beta)
        elif self.kind == "ci":
            d["radius"] = self.radius
        return d


@dataclass(frozen=True)
class CentralityScores:
    metric: Metric
    mode: WeightMode
    scores: dict[int, float] = field(repr=False)

    def __getitem__(self, node: int) -> float:
        return self.scores[node]

    def __len__(self) -> int:
        return len(self.scores)

    def ranked(self) -> list[int]:
        return rank_nodes(self)


def _wrap(metric: Metric, mode: WeightMode, ids, values) -> CentralityScores:
    return CentralityScores(metric, mode, {int(n): float(v) for n, v in zip(ids, values)})


def degree_centrality(g: Graph, mode: WeightMode | str = WeightMode.UNWEIGHTED) -> CentralityScores:
    mode = WeightMode.parse(mode)
    return CentralityScores(Metric.degree(), mode, {n: float(g.degree(n, mode)) for n in g.nodes})


def betweenness_centrality(g: Graph, mode: WeightMode | str = WeightMode.UNWEIGHTED) -> CentralityScores:
    """Unnormalized shortest-path betweenness over unordered pairs, endpoints excluded.

    BFS in unweighted mode, Dijkstra over raw weights in weighted mode.
    Disconnected pairs contribute nothing.
    """
    mode = WeightMode.parse(mode)
    csr = g.to_csr(mode)
    if mode is WeightMode.WEIGHTED:
        bc = kernels.betweenness_weighted(csr.indptr, csr.indices, csr.weights)
    else:
        bc = kernels.betweenness_hops(csr.indptr, csr.indices)
    return _wrap(Metric.betweenness(), mode, csr.ids, bc)


def spectral_radius(g: Graph, mode: WeightMode | str = WeightMode.UNWEIGHTED) -> float:
    """Largest adjacency eigenvalue (0.0 for an edgeless graph)."""
    csr = g.to_csr(WeightMode.parse(mode))
    lam, _ = kernels.largest_eigenvalue(csr.indptr, csr.indices, csr.weights, EIGEN_TOL, EIGEN_MAX_ITER)
    return float(lam)


def spectral_bound(g: Graph, mode: WeightMode | str = WeightMode.UNWEIGHTED) -> float:
    """Supremum of admissible Katz alpha, ``1 / lambda_max``; ``inf`` without edges."""
    lam = spectral_radius(g, mode)
    return math.inf if lam <= 0 else 1.0 / lam


def katz_centrality(g: Graph, mode: WeightMode | str = WeightMode.UNWEIGHTED,
                    alpha: float = 0.1, beta: float = 1.0) -> CentralityScores:
    """Fixed point of ``x = alpha * A x + beta`` by Jacobi iteration from ``x = beta``.

    Raises KatzDivergenceError when alpha is at or above the spectral bound of
    the matrix in use, or when the sweeps fail to settle within the cap.
    """
    mode = WeightMode.parse(mode)
    metric = Metric.katz(alpha, beta)
    bound = spectral_bound(g, mode)
    if alpha >= bound:
        raise KatzDivergenceError(alpha, bound, "alpha at or above 1/lambda_max")
    csr = g.to_csr(mode)
    x, _, converged = kernels.katz_sweeps(csr.indptr, csr.indices, csr.weights,
                                          float(alpha), float(beta), KATZ_TOL, KATZ_MAX_SWEEPS)
    if not converged:
        raise KatzDivergenceError(alpha, bound, f"no convergence within {KATZ_MAX_SWEEPS} sweeps")
    return _wrap(metric, mode, csr.ids, x)


def collective_influence(g: Graph, mode: WeightMode | str = WeightMode.UNWEIGHTED,
                         radius: int = 2) -> CentralityScores:
    """CI at ``radius`` hops; weighted mode swaps degrees for weight sums, frontier stays hop-based."""
    mode = WeightMode.parse(mode)
    metric = Metric.collective_influence(radius)
    csr = g.to_csr(mode)
    n = len(csr.ids)
    rows = np.repeat(np.arange(n), np.diff(csr.indptr))
    k = np.bincount(rows, weights=csr.weights, minlength=n).astype(np.float64)
    ci = kernels.collective_influence(csr.indptr, csr.indices, k, int(radius))
    return _wrap(metric, mode, csr.ids, ci)


def compute(g: Graph, metric: Metric, mode: WeightMode | str = WeightMode.UNWEIGHTED) -> CentralityScores:
    if metric.kind == "degree":
        return degree_centrality(g, mode)
    if metric.kind == "betweenness":
        return betweenness_centrality(g, mode)
    if metric.kind == "katz":
        return katz_centrality(g, mode, metric.alpha, metric.beta)
    return collective_influence(g, mode, metric.radius)


def rank_nodes(scores: CentralityScores | dict[int, float]) -> list[int]:
    """Node ids by descending score, ties broken by ascending id."""
    if isinstance(scores, CentralityScores):
        scores = scores.scores
    return sorted(scores, key=lambda n: (-round(scores[n], RANK_DECIMALS), n))
