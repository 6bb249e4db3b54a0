"""Sequential and block node-removal attacks with per-iteration re-ranking."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import centrality
from .centrality import KatzDivergenceError, Metric
from .graph import Graph, WeightMode

RHO_TARGET = 0.30


class DisruptionError(ValueError):
    pass


@dataclass(frozen=True)
class Strategy:
    """``sequential`` removes one node per iteration, ``block`` removes ``block_size``."""

    kind: str = "sequential"
    block_size: int = 1

    def __post_init__(self):
        if self.kind not in ("sequential", "block"):
            raise ValueError(f"unknown strategy {self.kind!r}")
        if isinstance(self.block_size, bool) or int(self.block_size) != self.block_size or self.block_size < 1:
            raise ValueError(f"block size must be an integer >= 1, got {self.block_size}")
        if self.kind == "sequential" and self.block_size != 1:
            raise ValueError("sequential strategy removes exactly one node per iteration")

    @classmethod
    def sequential(cls) -> Strategy:
        return cls("sequential", 1)

    @classmethod
    def block(cls, block_size: int = 5) -> Strategy:
        return cls("block", block_size)

    @property
    def label(self) -> str:
        return self.kind if self.kind == "sequential" else f"block({self.block_size})"

    def as_dict(self) -> dict:
        return {"kind": self.kind, "block_size": self.block_size}


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    removed: tuple[int, ...]
    scores: tuple[float, ...]
    lcc_size: int
    rho: float


@dataclass
class DisruptionRun:
    metric: Metric
    mode: WeightMode
    strategy: Strategy
    graph_checksum: str
    trace: list[IterationRecord] = field(default_factory=list)

    @property
    def rhos(self) -> list[float]:
        return [r.rho for r in self.trace]

    @property
    def removal_order(self) -> list[int]:
        return [n for r in self.trace for n in r.removed]

    def rho_at(self, iteration: int) -> float:
        """rho after ``iteration`` steps; 0 once the graph is gone."""
        return self.trace[iteration].rho if iteration < len(self.trace) else 0.0

    def first_iteration_at_or_below(self, threshold: float = RHO_TARGET) -> int | None:
        for rec in self.trace:
            if rec.rho <= threshold:
                return rec.iteration
        return None

    @property
    def label(self) -> str:
        return f"{self.metric.label}/{self.mode.value}/{self.strategy.label}"


def rho(lcc_now: int, lcc_initial: int) -> float:
    """Surviving fraction of the initial largest component, in [0, 1]."""
    if lcc_initial < 1:
        raise ValueError(f"initial LCC size must be >= 1, got {lcc_initial}")
    if lcc_now < 0 or lcc_now > lcc_initial:
        raise ValueError(f"LCC size {lcc_now} outside [0, {lcc_initial}]")
    return 1.0 - abs((lcc_now - lcc_initial) / lcc_initial)


def run_disruption(g: Graph, metric: Metric, mode: WeightMode | str = WeightMode.UNWEIGHTED,
                   strategy: Strategy | None = None, adaptive: bool = True) -> DisruptionRun:
    """Remove top-ranked nodes until the graph is empty, recording LCC and rho.

    Centrality is recomputed on the current graph before every removal step.
    ``adaptive=False`` ranks once on the intact graph and removes in that
    fixed order; it exists for comparison only.
    """
    mode = WeightMode.parse(mode)
    strategy = strategy or Strategy.sequential()
    if len(g) == 0:
        raise DisruptionError("cannot disrupt an empty graph")
    work = g.copy()
    lcc0 = work.lcc_size()
    run = DisruptionRun(metric, mode, strategy, g.checksum())
    run.trace.append(IterationRecord(0, (), (), lcc0, 1.0))

    frozen = None
    if not adaptive:
        scores = centrality.compute(work, metric, mode)
        frozen = [(n, scores[n]) for n in centrality.rank_nodes(scores)]

    it = 0
    while len(work):
        it += 1
        if frozen is None:
            try:
                scores = centrality.compute(work, metric, mode)
            except KatzDivergenceError as exc:
                raise DisruptionError(f"iteration {it}: {exc}") from exc
            picked = [(n, scores[n]) for n in centrality.rank_nodes(scores)[:strategy.block_size]]
        else:
            picked = frozen[:strategy.block_size]
            del frozen[:strategy.block_size]
        work.remove_nodes(n for n, _ in picked)
        lcc = work.lcc_size()
        run.trace.append(IterationRecord(it, tuple(n for n, _ in picked),
                                         tuple(s for _, s in picked), lcc, rho(lcc, lcc0)))
    return run


@dataclass
class ComparisonTable:
    """rho per iteration, one column per run, padded with 0 past each run's end."""

    labels: list[str]
    rows: list[list[float]]
    first_below: list[int | None]
    threshold: float = RHO_TARGET

    def column(self, j: int) -> list[float]:
        return [row[j] for row in self.rows]

    def to_csv(self) -> str:
        lines = [",".join(["iteration"] + self.labels)]
        for i, row in enumerate(self.rows):
            lines.append(",".join([str(i)] + [f"{v:.6f}" for v in row]))
        return "\n".join(lines) + "\n"


def compare_runs(runs: list[DisruptionRun], threshold: float = RHO_TARGET) -> ComparisonTable:
    if not runs:
        raise DisruptionError("no runs to compare")
    checksums = {r.graph_checksum for r in runs}
    if len(checksums) != 1:
        raise DisruptionError("runs were computed on different initial graphs")
    labels, seen = [], {}
    for r in runs:
        base = r.label
        seen[base] = seen.get(base, 0) + 1
        labels.append(base if seen[base] == 1 else f"{base}#{seen[base]}")
    length = max(len(r.trace) for r in runs)
    rows = [[r.rho_at(i) for r in runs] for i in range(length)]
    return ComparisonTable(labels, rows, [r.first_iteration_at_or_below(threshold) for r in runs], threshold)
