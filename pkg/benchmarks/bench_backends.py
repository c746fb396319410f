"""Benchmark the compiled kernels against the pure-numpy fallback.

Runs the two hot kernels (the adversary split scan and the full-grid
pre-commitment gain scan) through both implementations, checks that the
results agree bit for bit, and prints the timings.

Usage: python benchmarks/bench_backends.py [--quick]
"""

import argparse
import time

import numpy as np

from prelotto import _reference

try:
    from prelotto import _speedups
except ImportError:
    _speedups = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_split_scan(impl, games, resolution):
    def run():
        for x1, x2, f1, f2 in games:
            impl.split_scan(x1, x2, f1, f2, 1.0, 0.0, 1.0, resolution)

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    n_games = 200 if args.quick else 1000
    resolution = 1001 if args.quick else 2001
    gain_res = 50 if args.quick else 100
    repeat = 3

    rng = np.random.default_rng(0)
    games = [
        (rng.uniform(0.05, 1.95), rng.uniform(0.05, 1.95), rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0))
        for _ in range(n_games)
    ]

    impls = [("numpy", _reference)]
    if _speedups is not None:
        impls.append(("cython", _speedups))
    else:
        print("compiled extension not available; benchmarking the fallback only")

    print(f"split_scan: {n_games} games x {resolution} grid points")
    split_times = {}
    for name, impl in impls:
        split_times[name] = _time(bench_split_scan(impl, games, resolution), repeat)
        print(f"  {name:>7}: {split_times[name] * 1e3:8.1f} ms")

    print(f"precommit_gain_scan: {gain_res}^3 cells")
    gain_times = {}
    gain_results = {}
    for name, impl in impls:
        gain_times[name] = _time(lambda: impl.precommit_gain_scan(gain_res, gain_res, gain_res, 1.0), repeat)
        gain_results[name] = impl.precommit_gain_scan(gain_res, gain_res, gain_res, 1.0)
        print(f"  {name:>7}: {gain_times[name] * 1e3:8.1f} ms")

    if _speedups is not None:
        assert gain_results["numpy"] == gain_results["cython"], "backends disagree"
        sample = games[:50]
        for x1, x2, f1, f2 in sample:
            a = _reference.split_scan(x1, x2, f1, f2, 1.0, 0.0, 1.0, resolution)
            b = _speedups.split_scan(x1, x2, f1, f2, 1.0, 0.0, 1.0, resolution)
            assert a == b, "backends disagree"
        print("agreement: bit-identical results on both kernels")
        print(
            f"speedup: split_scan x{split_times['numpy'] / split_times['cython']:.1f}, "
            f"gain_scan x{gain_times['numpy'] / gain_times['cython']:.1f}"
        )


if __name__ == "__main__":
    main()
