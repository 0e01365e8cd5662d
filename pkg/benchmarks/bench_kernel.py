"""Time the removal sweep under the compiled and the pure-Python backend.

    python benchmarks/bench_kernel.py [--max-n 5] [--repeat 3]
"""

import argparse
import time

from krobust import _kernels, constructions
from krobust.enumeration import enumerate_solutions
from krobust.robustness import INF, check_k_robust
from krobust.solutions import Problem
from krobust.sweeps import connected_graphs


def workloads(max_n):
    universe = list(connected_graphs(max_n))
    jobs = {}
    for p in Problem:
        jobs[f"all {p.value.upper()} on n<={max_n}, k=inf"] = [
            (p, g, s, INF) for g in universe for s in enumerate_solutions(p, g)
        ]
    jobs["G_k witnesses k=1..4, k+1"] = [
        (Problem.MIS, w.graph, s, k + 1)
        for k in range(1, 5)
        for w in [constructions.gk_witness(k)]
        for s in enumerate_solutions(Problem.MIS, w.graph)
    ]
    blow = [constructions.k_copies_blowup(g, 2) for g in (constructions.cycle(4), constructions.cycle(6))]
    jobs["2-copy blowups of C4, C6, k=3"] = [
        (Problem.MIS, g, s, 3) for g in blow for s in enumerate_solutions(Problem.MIS, g)
    ]
    return jobs


def run(jobs, backend):
    for p, g, s, k in jobs:
        check_k_robust(p, g, s, k, validate=False, backend=backend)


def best_of(jobs, backend, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        run(jobs, backend)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.BACKEND != "cython":
        raise SystemExit("compiled kernel not available; build with pip install -e . --no-build-isolation")
    print(f"{'workload':<36} {'calls':>7} {'cython s':>9} {'python s':>9} {'speedup':>8}")
    for name, jobs in workloads(args.max_n).items():
        fast = best_of(jobs, "cython", args.repeat)
        slow = best_of(jobs, "python", args.repeat)
        print(f"{name:<36} {len(jobs):>7} {fast:>9.3f} {slow:>9.3f} {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
