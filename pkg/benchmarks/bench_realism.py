#!/usr/bin/env python3
"""Compare the JIT and interpreted backends of the realism scan.

Two workloads per kappa: a realistic target (the scan stops at the first
witness) and a synthetic impossible target that forces a full sweep of
all kappa! * 2^kappa arrangements.  The impossible target sets the
vertex's own bit in its adjacency mask, which no encoded string can
produce, so it is a clean worst case.

Usage:
    python3 benchmarks/bench_realism.py [--kappa 6] [--repeat 3]
"""

import argparse
import time

import numpy as np

from geneasm import kernels, overlap, pointers, sampling


def _inputs_for_graph(g):
    kappa = len(g.vertices) + 1
    adjacency = np.zeros(kappa + 1, dtype=np.int64)
    for p, q in g.edges:
        adjacency[p] |= 1 << q
        adjacency[q] |= 1 << p
    positive_mask = 0
    for p in g.positive:
        positive_mask |= 1 << p
    return adjacency, np.int64(positive_mask), np.int64(kappa)


def _impossible_inputs(kappa):
    adjacency = np.zeros(kappa + 1, dtype=np.int64)
    adjacency[2] = 1 << 2  # a pointer never overlaps itself
    return adjacency, np.int64(0), np.int64(kappa)


def _time(scan, adjacency, positive_mask, kappa, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        out_perm = np.zeros(int(kappa), dtype=np.int64)
        started = time.perf_counter()
        result = scan(adjacency, positive_mask, kappa, out_perm)
        best = min(best, time.perf_counter() - started)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kappa", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    import random

    rng = random.Random(args.seed)
    found_graph = overlap.overlap_graph(
        pointers.encode_arrangement(sampling.random_arrangement(rng, args.kappa))
    )
    cases = [
        ("found", _inputs_for_graph(found_graph)),
        ("absent-full-sweep", _impossible_inputs(args.kappa)),
    ]

    backends = [("python", kernels.scan_arrangements_python)]
    if kernels.scan_arrangements_numba is not None:
        # trigger compilation outside the timed region
        warm = _impossible_inputs(2)
        kernels.scan_arrangements_numba(*warm, np.zeros(2, dtype=np.int64))
        backends.append(("numba", kernels.scan_arrangements_numba))

    total = 1
    for k in range(2, args.kappa + 1):
        total *= k
    total *= 1 << args.kappa

    print(f"kappa={args.kappa}  arrangement space={total}  repeat={args.repeat}")
    print(f"{'case':<20}{'backend':<10}{'seconds':>12}{'arrangements/s':>18}")
    timings = {}
    for case_name, inputs in cases:
        for backend_name, scan in backends:
            seconds, result = _time(scan, *inputs, repeat=args.repeat)
            rate = total / seconds if case_name.startswith("absent") else float("nan")
            timings[(case_name, backend_name)] = seconds
            rate_text = f"{rate:>18.0f}" if rate == rate else f"{'-':>18}"
            print(f"{case_name:<20}{backend_name:<10}{seconds:>12.4f}{rate_text}")
    for case_name, _ in cases:
        py = timings.get((case_name, "python"))
        nb = timings.get((case_name, "numba"))
        if py and nb:
            print(f"{case_name}: numba speedup {py / nb:.1f}x")


if __name__ == "__main__":
    main()
