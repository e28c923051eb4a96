#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the pure-Python twin.

Times the hot paths on both backends and prints a table.  Representative of
real workloads: single huge-index terms (big-integer bound, so the backends
tie), and the grid-scan loops where dispatch overhead dominates (where the
compiled backend wins).

Usage: python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import sys
import time

from brigkit import _kernels_py as pure

try:
    from brigkit import _kernels_c as compiled
except ImportError:
    compiled = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_term(mod):
    for n in (10 ** 4, 10 ** 5, 10 ** 6):
        mod.term_at(10, -10, 3, 7, n)


def bench_term_iter(mod):
    for _ in range(200):
        mod.term_iter(9, 7, 3, -2, 400)


def bench_zero_scan(mod):
    for a in range(-6, 7):
        for b in range(-6, 7):
            for p, q in ((1, 1), (2, -3), (5, 6)):
                mod.zero_scan(a, b, p, q, 0, 300)


def bench_real_growth(mod):
    for a in range(3, 11):
        for b in range(-10, 11):
            if a * a <= 4 * b or b == 0:
                continue
            mod.real_growth_scan(a, b, 1, 1, 12, 200, True)
            mod.real_growth_scan(a, b, 2, -3, 25, 200, False)


def bench_nonreal_growth(mod):
    for a in range(-6, 7):
        for b in range(2, 11):
            if a * a < 4 * b:
                mod.nonreal_growth_scan(a, b, 5, -3, 0, 300)


def bench_lucas_pairs(mod):
    for a in range(-8, 9):
        for b in range(-8, 9):
            for n in (100, 500, 2000):
                mod.lucas_u_pair(a, b, n)


BENCHES = [
    ("term_at (n = 1e4, 1e5, 1e6)", bench_term),
    ("term_iter (200 x n=400)", bench_term_iter),
    ("zero_scan (507 x 300 steps)", bench_zero_scan),
    ("real_growth_scan (grid to n=200)", bench_real_growth),
    ("nonreal_growth_scan (grid to n=300)", bench_nonreal_growth),
    ("lucas_u_pair (867 doublings)", bench_lucas_pairs),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if compiled is None:
        print("compiled backend not built; showing pure-Python timings only")
    width = max(len(name) for name, _ in BENCHES)
    header = f"{'benchmark':<{width}}  {'pure (s)':>10}"
    if compiled is not None:
        header += f"  {'compiled (s)':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in BENCHES:
        t_pure = timeit(lambda: fn(pure), args.repeat)
        row = f"{name:<{width}}  {t_pure:>10.4f}"
        if compiled is not None:
            t_comp = timeit(lambda: fn(compiled), args.repeat)
            row += f"  {t_comp:>12.4f}  {t_pure / t_comp:>7.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
