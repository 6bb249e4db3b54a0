"""Edge-list parsing, network statistics and trace serialization."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import IO, Iterable

from .centrality import Metric
from .disruption import DisruptionRun, IterationRecord, Strategy
from .graph import Graph, WeightMode


class EdgeListError(ValueError):
    """Malformed edge-list input; ``line`` is 1-based and counts the header."""

    def __init__(self, line: int, message: str, source: str = "<input>"):
        super().__init__(f"{source}:{line}: {message}")
        self.line = line
        self.source = source


@dataclass(frozen=True)
class EdgeRecord:
    source: int
    target: int
    weight: int = 1


@dataclass(frozen=True)
class NetworkStats:
    node_count: int
    edge_count: int
    max_weight: int
    avg_degree: float
    max_shortest_path: int

    def as_dict(self) -> dict:
        return asdict(self)

    def format_table(self) -> str:
        return "\n".join([
            f"Nodes: {self.node_count}",
            f"Edges: {self.edge_count}",
            f"Max weight: {self.max_weight}",
            f"Avg degree: {self.avg_degree:.2f}",
            f"Max shortest path: {self.max_shortest_path}",
        ]) + "\n"


def _parse_int(text: str, what: str, line: int, source: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise EdgeListError(line, f"{what} {text!r} is not an integer", source) from None


def iter_edge_records(lines: Iterable[str], source: str = "<input>") -> Iterable[tuple[int, EdgeRecord]]:
    """Yield ``(line_number, record)`` pairs; validates each row but not duplicates."""
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None:
        raise EdgeListError(1, "empty file, expected header 'source,target[,weight]'", source)
    cols = [h.strip().lower() for h in header]
    if "source" not in cols or "target" not in cols:
        raise EdgeListError(1, f"header must name source and target columns, got {header}", source)
    i_src, i_tgt = cols.index("source"), cols.index("target")
    i_w = cols.index("weight") if "weight" in cols else None
    for row in reader:
        line = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(cols):
            raise EdgeListError(line, f"expected {len(cols)} fields, got {len(row)}", source)
        s = _parse_int(row[i_src], "source id", line, source)
        t = _parse_int(row[i_tgt], "target id", line, source)
        w = 1 if i_w is None else _parse_int(row[i_w], "weight", line, source)
        if s < 0 or t < 0:
            raise EdgeListError(line, "node ids must be non-negative", source)
        if w < 1:
            raise EdgeListError(line, f"weight must be >= 1, got {w}", source)
        if s == t:
            raise EdgeListError(line, f"self-loop on node {s}", source)
        yield line, EdgeRecord(s, t, w)


def parse_edge_list(lines: Iterable[str], source: str = "<input>") -> Graph:
    g = Graph()
    for line, rec in iter_edge_records(lines, source):
        for n in (rec.source, rec.target):
            if n not in g:
                g.add_node(n)
        if g.has_edge(rec.source, rec.target):
            raise EdgeListError(line, f"duplicate edge {rec.source}-{rec.target}", source)
        g.add_edge(rec.source, rec.target, rec.weight)
    return g


def load_edge_list(path: str | os.PathLike) -> Graph:
    """Read a ``source,target[,weight]`` CSV; missing weight column means weight 1."""
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_edge_list(fh, source=str(path))


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["source", "target", "weight"])
        for i, j, wt in g.edges():
            w.writerow([i, j, int(wt) if float(wt).is_integer() else wt])


def convert_delimited(src: str | os.PathLike, dst: str | os.PathLike, *, delimiter: str | None = None,
                      columns: tuple[int, int, int | None] = (0, 1, 2), skip_header: bool = False) -> int:
    """Rewrite a headerless delimited edge list into the canonical CSV.

    ``delimiter=None`` splits on any whitespace. ``columns`` gives the 0-based
    positions of source, target and weight (``None`` for no weight column).
    Returns the number of edges written; input is validated by re-parsing.
    """
    out = io.StringIO()
    out.write("source,target,weight\n")
    count = 0
    with open(src, encoding="utf-8") as fh:
        for k, raw in enumerate(fh):
            if (skip_header and k == 0) or not raw.strip():
                continue
            parts = raw.strip().split(delimiter)
            c_s, c_t, c_w = columns
            weight = parts[c_w].strip() if c_w is not None else "1"
            out.write(f"{parts[c_s].strip()},{parts[c_t].strip()},{weight}\n")
            count += 1
    text = out.getvalue()
    parse_edge_list(text.splitlines(), source=str(src))
    Path(dst).write_text(text, encoding="utf-8")
    return count


def file_checksum(path: str | os.PathLike) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def compute_stats(g: Graph) -> NetworkStats:
    n, m = g.number_of_nodes(), g.number_of_edges()
    weights = [w for _, _, w in g.edges()]
    return NetworkStats(
        node_count=n,
        edge_count=m,
        max_weight=int(max(weights)) if weights else 0,
        avg_degree=2.0 * m / n if n else 0.0,
        max_shortest_path=int(g.max_shortest_path(WeightMode.UNWEIGHTED)),
    )


def common_nodes(g1: Graph, g2: Graph) -> set[int]:
    return set(g1.nodes) & set(g2.nodes)


def weight_distribution(g: Graph) -> dict[float, int]:
    """Edge count per weight value, keys ascending."""
    counts = Counter(w for _, _, w in g.edges())
    return dict(sorted(counts.items()))


def _open_dest(dest):
    if hasattr(dest, "write"):
        return dest, False
    try:
        return open(dest, "w", newline="", encoding="utf-8"), True
    except OSError as exc:
        raise OSError(f"cannot write {dest}: {exc.strerror or exc}") from exc


def run_to_dict(run: DisruptionRun, dataset_checksum: str | None = None) -> dict:
    return {
        "metadata": {
            "metric": run.metric.as_dict(),
            "mode": run.mode.value,
            "strategy": run.strategy.as_dict(),
            "dataset_checksum": dataset_checksum or run.graph_checksum,
            "graph_checksum": run.graph_checksum,
        },
        "trace": [
            {"iteration": r.iteration, "removed": list(r.removed), "scores": list(r.scores),
             "lcc_size": r.lcc_size, "rho": r.rho}
            for r in run.trace
        ],
    }


def run_from_dict(data: dict) -> DisruptionRun:
    meta = data["metadata"]
    run = DisruptionRun(Metric(**meta["metric"]), WeightMode.parse(meta["mode"]),
                        Strategy(**meta["strategy"]), meta["graph_checksum"])
    for r in data["trace"]:
        run.trace.append(IterationRecord(r["iteration"], tuple(r["removed"]), tuple(r["scores"]),
                                         r["lcc_size"], r["rho"]))
    return run


def export_run(run: DisruptionRun, fmt: str, dest: str | os.PathLike | IO[str],
               dataset_checksum: str | None = None) -> None:
    """Write a trace as CSV (``iteration,removed,lcc_size,rho``) or JSON."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    fh, owned = _open_dest(dest)
    try:
        if fmt == "json":
            json.dump(run_to_dict(run, dataset_checksum), fh, indent=2)
            fh.write("\n")
        else:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["iteration", "removed", "lcc_size", "rho"])
            for r in run.trace:
                w.writerow([r.iteration, ";".join(map(str, r.removed)), r.lcc_size, f"{r.rho:.6f}"])
    except OSError as exc:
        raise OSError(f"cannot write {dest}: {exc}") from exc
    finally:
        if owned:
            fh.close()


def load_run_json(path: str | os.PathLike) -> DisruptionRun:
    with open(path, encoding="utf-8") as fh:
        return run_from_dict(json.load(fh))
