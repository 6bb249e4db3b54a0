"""Command-line front end: ``netdisrupt {stats,centrality,disrupt,compare}``."""
from __future__ import annotations

import argparse
import json
import sys

from . import centrality
from .centrality import KatzDivergenceError, Metric
from .dataset_io import (EdgeListError, compute_stats, export_run, file_checksum, load_edge_list,
                         weight_distribution)
from .disruption import RHO_TARGET, DisruptionError, Strategy, compare_runs, run_disruption
from .graph import WeightMode

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DIVERGENCE = 4
EXIT_IO = 5

METRICS = ("degree", "betweenness", "katz", "ci")


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dataset", required=True, metavar="PATH", help="edge list CSV (source,target[,weight])")
    common.add_argument("--mode", choices=[m.value for m in WeightMode], default="unweighted")
    common.add_argument("--output", metavar="PATH", help="write machine-readable output here instead of stdout")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--katz-alpha", type=_positive_float, default=0.1)
    common.add_argument("--katz-beta", type=float, default=1.0)
    common.add_argument("--ci-radius", type=_positive_int, default=2)

    attack = argparse.ArgumentParser(add_help=False)
    attack.add_argument("--strategy", choices=("sequential", "block"), default="sequential")
    attack.add_argument("--block-size", type=_positive_int, default=5)

    parser = argparse.ArgumentParser(prog="netdisrupt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="node/edge counts, max weight, avg degree, diameter")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("centrality", parents=[common], help="rank nodes by one centrality metric")
    p.add_argument("--metric", choices=METRICS, default="betweenness")
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("disrupt", parents=[common, attack], help="simulate a node-removal attack")
    p.add_argument("--metric", choices=METRICS, default="betweenness")
    p.set_defaults(func=cmd_disrupt)

    p = sub.add_parser("compare", parents=[common, attack], help="align rho curves of several metrics")
    p.add_argument("--metric", choices=METRICS, action="append", dest="metrics",
                   help="repeat for each metric to compare (at least two)")
    p.set_defaults(func=cmd_compare)
    return parser


def _metric(name: str, args) -> Metric:
    if name == "katz":
        return Metric.katz(args.katz_alpha, args.katz_beta)
    if name == "ci":
        return Metric.collective_influence(args.ci_radius)
    return Metric(name)


def _strategy(args) -> Strategy:
    return Strategy.sequential() if args.strategy == "sequential" else Strategy.block(args.block_size)


def _write(args, text: str) -> None:
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write {args.output}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)


def cmd_stats(args) -> int:
    g = load_edge_list(args.dataset)
    stats = compute_stats(g)
    sys.stdout.write(stats.format_table())
    if args.output:
        payload = stats.as_dict()
        payload["weight_distribution"] = {str(int(k) if float(k).is_integer() else k): v
                                          for k, v in weight_distribution(g).items()}
        _write(args, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def cmd_centrality(args) -> int:
    g = load_edge_list(args.dataset)
    scores = centrality.compute(g, _metric(args.metric, args), args.mode)
    ranked = centrality.rank_nodes(scores)
    if args.format == "json":
        text = json.dumps({"metric": scores.metric.as_dict(), "mode": scores.mode.value,
                           "ranking": [{"node": n, "score": scores[n]} for n in ranked]}, indent=2) + "\n"
    else:
        text = "rank,node,score\n" + "".join(f"{k},{n},{scores[n]!r}\n" for k, n in enumerate(ranked, 1))
    _write(args, text)
    return EXIT_OK


def cmd_disrupt(args) -> int:
    g = load_edge_list(args.dataset)
    run = run_disruption(g, _metric(args.metric, args), args.mode, _strategy(args))
    checksum = file_checksum(args.dataset)
    if args.output:
        export_run(run, args.format, args.output, dataset_checksum=checksum)
        summary_stream = sys.stdout
    else:
        export_run(run, args.format, sys.stdout, dataset_checksum=checksum)
        summary_stream = sys.stderr
    hit = run.first_iteration_at_or_below(RHO_TARGET)
    removed = sum(len(r.removed) for r in run.trace[:hit + 1]) if hit is not None else len(g)
    print(f"{run.label}: rho <= {RHO_TARGET:.2f} first reached at iteration {hit} "
          f"({removed} of {len(g)} nodes removed)", file=summary_stream)
    return EXIT_OK


def cmd_compare(args) -> int:
    metrics = args.metrics or []
    if len(metrics) < 2:
        raise UsageError("compare needs at least two --metric flags")
    g = load_edge_list(args.dataset)
    strategy = _strategy(args)
    runs = [run_disruption(g, _metric(m, args), args.mode, strategy) for m in metrics]
    table = compare_runs(runs)
    if args.format == "json":
        text = json.dumps({"labels": table.labels, "rows": table.rows,
                           "first_below": dict(zip(table.labels, table.first_below)),
                           "threshold": table.threshold}, indent=2) + "\n"
    else:
        text = table.to_csv()
    _write(args, text)
    for label, hit in zip(table.labels, table.first_below):
        print(f"{label}: rho <= {table.threshold:.2f} at iteration {hit}", file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"netdisrupt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListError as exc:
        print(f"netdisrupt: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except KatzDivergenceError as exc:
        print(f"netdisrupt: divergence: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE
    except DisruptionError as exc:
        if isinstance(exc.__cause__, KatzDivergenceError):
            print(f"netdisrupt: divergence: {exc}", file=sys.stderr)
            return EXIT_DIVERGENCE
        print(f"netdisrupt: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"netdisrupt: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
