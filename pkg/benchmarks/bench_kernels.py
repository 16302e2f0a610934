"""Benchmark the compiled spacing kernels against the pure-Python
fallback, and the transform correlation path against direct dots.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]

The script always checks that both backends agree before timing them.
"""

import argparse
import time

import numpy as np

from detsense import bipolar_matrix, correlate_all, correlation_cost, kernels
from detsense.analysis import shift_group_partition
from detsense import _speedups_py

try:
    from detsense import _speedups
except ImportError:
    _speedups = None


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return result, best


def bench_spacing(repeat):
    print(f"spacing kernels (active backend: {kernels.BACKEND})")
    cases = [("count", 2, 24), ("count", 3, 26), ("members", 2, 20)]
    for kind, a, b in cases:
        if kind == "count":
            py = lambda: _speedups_py.circular_spacing_count(a, b)
            cy = (lambda: _speedups.circular_spacing_count(a, b)) \
                if _speedups else None
        else:
            py = lambda: _speedups_py.circular_spacing_members(a, b)
            cy = (lambda: _speedups.circular_spacing_members(a, b)) \
                if _speedups else None
        py_result, py_time = timed(py, repeat)
        line = f"  {kind}(a={a}, b={b}): python {py_time * 1e3:8.2f} ms"
        if cy is not None:
            cy_result, cy_time = timed(cy, repeat)
            same = (list(py_result) == list(cy_result)
                    if kind == "members" else py_result == cy_result)
            if not same:
                raise SystemExit(f"backend mismatch on {kind}({a}, {b})")
            line += (f"   cython {cy_time * 1e3:8.2f} ms"
                     f"   speedup {py_time / cy_time:6.1f}x   agree yes")
        else:
            line += "   (cython extension not built)"
        print(line)


def bench_correlation(repeat):
    print("correlation pass, direct dots vs per-group transforms")
    for label, matrix in (("63x512", bipolar_matrix(6, 2)),
                          ("1023x1023", bipolar_matrix(10, 10))):
        partition = shift_group_partition(matrix)
        rng = np.random.default_rng(0)
        residuals = rng.standard_normal((20, matrix.rows))

        def direct():
            for r in residuals:
                correlate_all(matrix, None, r)

        def fast():
            for r in residuals:
                correlate_all(matrix, partition, r, fast=True)

        check = correlate_all(matrix, partition, residuals[0], fast=True)
        reference = correlate_all(matrix, None, residuals[0])
        if np.abs(check - reference).max() > 1e-9:
            raise SystemExit(f"correlation paths disagree on {label}")
        _, direct_time = timed(direct, repeat)
        _, fast_time = timed(fast, repeat)
        cost = correlation_cost(matrix.rows,
                                [g.period for g in partition.groups])
        print(f"  {label}: direct {direct_time * 1e3:8.2f} ms   "
              f"transform {fast_time * 1e3:8.2f} ms   "
              f"measured {direct_time / fast_time:5.2f}x   "
              f"model {cost.ratio:5.2f}x "
              f"({cost.direct_multiplications} vs {cost.fast_total} "
              f"multiplications)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions, best of N (default 5)")
    args = parser.parse_args()
    bench_spacing(args.repeat)
    bench_correlation(args.repeat)


if __name__ == "__main__":
    main()
