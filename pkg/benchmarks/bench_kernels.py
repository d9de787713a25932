#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Usage: python benchmarks/bench_kernels.py [--sizes 100,300,600]
"""

import argparse
import time

import numpy as np

from siblink import _kernels


def timeit(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_score(sizes):
    print("\nscore accumulation (n x n prediction matrix -> evidence tally)")
    print(f"{'n':>6} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    rng = np.random.default_rng(0)
    for n in sizes:
        upper = np.triu((rng.random((n, n)) < 0.3).astype(np.int8), k=1)
        P = upper + upper.T
        t_np = timeit(_kernels.score_accumulate_numpy, P)
        if _kernels.HAVE_NUMBA:
            _kernels.score_accumulate_numba(P)  # compile outside the timer
            t_nb = timeit(_kernels.score_accumulate_numba, P)
            print(f"{n:>6} {t_np * 1e3:>10.2f}ms {t_nb * 1e3:>10.2f}ms {t_np / t_nb:>8.2f}x")
        else:
            print(f"{n:>6} {t_np * 1e3:>10.2f}ms {'-':>12} {'-':>9}")


def bench_pairs(sizes, width=64):
    print(f"\npairwise score grid (encoded width {width}, predictor 128/64/32/16/1)")
    print(f"{'n':>6} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    rng = np.random.default_rng(1)
    widths = (width, 128, 64, 32, 16, 1)
    weights = [rng.normal(size=(a, b)) * 0.1 for a, b in zip(widths, widths[1:])]
    biases = [rng.normal(size=b) * 0.1 for b in widths[1:]]
    for n in sizes:
        H = rng.normal(size=(n, width))
        t_np = timeit(_kernels.pair_scores_numpy, H, weights, biases, repeats=3)
        if _kernels.HAVE_NUMBA:
            _kernels.pair_scores_numba(H, weights, biases)
            t_nb = timeit(_kernels.pair_scores_numba, H, weights, biases, repeats=3)
            print(f"{n:>6} {t_np * 1e3:>10.1f}ms {t_nb * 1e3:>10.1f}ms {t_np / t_nb:>8.2f}x")
        else:
            print(f"{n:>6} {t_np * 1e3:>10.1f}ms {'-':>12} {'-':>9}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="100,300,600")
    parser.add_argument("--pair-sizes", default="100,200,400")
    args = parser.parse_args()
    print(f"numba available: {_kernels.HAVE_NUMBA}; active backend: "
          f"score={'numba' if _kernels.USE_NUMBA_SCORE else 'numpy'} pairs={'numba' if _kernels.USE_NUMBA_PAIRS else 'numpy'}")
    bench_score([int(s) for s in args.sizes.split(",")])
    bench_pairs([int(s) for s in args.pair_sizes.split(",")])


if __name__ == "__main__":
    main()
