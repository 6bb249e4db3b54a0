"""Time the numba kernels against their plain-Python fallback.

Run: python benchmarks/bench_kernels.py --nodes 100 --edges 256 --repeats 5

The fallback is each kernel's ``.py_func``, so both paths run in one process.
A full disruption run is also timed in a subprocess with
NETDISRUPT_DISABLE_NUMBA=1 for an end-to-end comparison.
"""
import argparse
import os
import random
import subprocess
import sys
import time

import numpy as np

from netdisrupt import Graph, NUMBA_ENABLED, kernels


def random_graph(n, m, seed):
    rnd = random.Random(seed)
    g = Graph.from_edges([], nodes=range(n))
    while g.number_of_edges() < m:
        i, j = rnd.sample(range(n), 2)
        if not g.has_edge(i, j):
            g.add_edge(i, j, rnd.randint(1, 10))
    return g


def timed(func, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


DISRUPT = """
import time, random
from netdisrupt import Graph, Metric, Strategy, run_disruption
rnd = random.Random({seed})
g = Graph.from_edges([], nodes=range({n}))
while g.number_of_edges() < {m}:
    i, j = rnd.sample(range({n}), 2)
    if not g.has_edge(i, j):
        g.add_edge(i, j, rnd.randint(1, 10))
run_disruption(g, Metric.betweenness(), "weighted", Strategy.sequential())
t0 = time.perf_counter()
run_disruption(g, Metric.betweenness(), "weighted", Strategy.sequential())
print((time.perf_counter() - t0) * 1000.0)
"""


def disrupt_ms(n, m, seed, disable):
    env = dict(os.environ)
    env.pop("NETDISRUPT_DISABLE_NUMBA", None)
    if disable:
        env["NETDISRUPT_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", DISRUPT.format(n=n, m=m, seed=seed)], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--nodes", type=int, default=100)
    p.add_argument("--edges", type=int, default=256)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    if not NUMBA_ENABLED:
        print("numba disabled or missing; nothing to compare", file=sys.stderr)
        return 1

    g = random_graph(args.nodes, args.edges, args.seed)
    csr = g.to_csr("weighted")
    cases = [
        ("betweenness_hops", kernels.betweenness_hops, (csr.indptr, csr.indices)),
        ("betweenness_weighted", kernels.betweenness_weighted, (csr.indptr, csr.indices, csr.weights)),
        ("collective_influence", kernels.collective_influence,
         (csr.indptr, csr.indices, np.diff(csr.indptr).astype(np.float64), 2)),
        ("katz_sweeps", kernels.katz_sweeps,
         (csr.indptr, csr.indices, np.ones_like(csr.weights), 0.05, 1.0, 1e-9, 10000)),
        ("component_labels", kernels.component_labels, (csr.indptr, csr.indices)),
    ]
    print(f"graph: {args.nodes} nodes, {args.edges} edges")
    print(f"{'kernel':<24}{'python ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, kern, kargs in cases:
        kern(*kargs)  # compile
        t_py = timed(kern.py_func, kargs, args.repeats)
        t_nb = timed(kern, kargs, args.repeats)
        print(f"{name:<24}{t_py:>12.3f}{t_nb:>12.3f}{t_py / max(t_nb, 1e-9):>9.1f}x")

    t_py = disrupt_ms(args.nodes, args.edges, args.seed, True)
    t_nb = disrupt_ms(args.nodes, args.edges, args.seed, False)
    print(f"{'disruption (betw, w)':<24}{t_py:>12.3f}{t_nb:>12.3f}{t_py / max(t_nb, 1e-9):>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
