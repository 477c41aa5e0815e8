#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Builds the full pairwise distance matrix for a seeded synthetic scenario
under both backends, across metrics and extraction factors, and prints
the wall-clock comparison. Usage:

    python benchmarks/bench_kernels.py [--flights 40] [--points 1000] [--repeats 5]
"""

import argparse
import time

from routecluster._kernels import available_backends
from routecluster.metrics import MetricKind, build_matrix
from routecluster.synthgen import ScenarioKind, ScenarioSpec, generate


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--flights", type=int, default=40, help="total flights (two bundles)")
    parser.add_argument("--points", type=int, default=1000, help="points per flight")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    spec = ScenarioSpec(
        kind=ScenarioKind.TWO_BUNDLES,
        flights_per_group=max(2, args.flights // 2),
        points_per_flight=args.points,
    )
    tracks, _ = generate(spec)
    backends = available_backends()
    if len(backends) < 2:
        print("note: compiled backend unavailable, benchmarking the fallback only")

    print(f"{len(tracks)} flights x {args.points} points, "
          f"best of {args.repeats}, workers={args.workers}\n")
    header = f"{'metric':<12} {'N':>3} " + "".join(f"{name:>18}" for name in backends) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for metric in MetricKind:
        for n in (1, 2, 4, 8, 16):
            times = {
                name: best_of(
                    lambda mod=mod: build_matrix(tracks, metric, n=n, workers=args.workers, backend=mod),
                    args.repeats,
                )
                for name, mod in backends.items()
            }
            row = f"{metric.value:<12} {n:>3} " + "".join(f"{t * 1000:>15.2f} ms" for t in times.values())
            if len(times) == 2:
                slow, fast = times["numpy-fallback"], times["cython-native"]
                row += f"{slow / fast:>9.1f}x"
            print(row)
    print()


if __name__ == "__main__":
    main()
