#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each kernel entry point on a few representative workloads, checks that
both backends agree, and prints a timing table.  The compiled extension is
skipped (with a note) if it was not built.
"""

from __future__ import annotations

import argparse
import time

from threecycle import _pykernels

try:
    from threecycle import _ckernels
except ImportError:
    _ckernels = None


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def run_case(name, make_workload):
    py_result, py_time = timed(make_workload(_pykernels))
    row = f"{name:<44} python {py_time:9.4f}s"
    if _ckernels is not None:
        c_result, c_time = timed(make_workload(_ckernels))
        if c_result != py_result:
            raise AssertionError(
                f"backend disagreement in {name}: {c_result} != {py_result}"
            )
        speedup = py_time / c_time if c_time > 0 else float("inf")
        row += f"   compiled {c_time:9.4f}s   x{speedup:,.1f}"
    print(row)


def staircase_sets(n):
    out, t = [], []

    def rec(i):
        if i > n:
            out.append(tuple(t))
            return
        lo = t[-1] + 1 if t else 1
        for v in range(lo, 3 * i - 1):
            t.append(v)
            rec(i + 1)
            t.pop()

    rec(1)
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--n",
        type=int,
        default=4,
        help="size parameter for the exhaustive-count cases (default 4)",
    )
    args = parser.parse_args()
    n = args.n

    if _ckernels is None:
        print("compiled extension not built; timing the fallback only")

    # a 321-avoider forces the full triple scan (no early exit)
    avoider = tuple(range(8, 16)) + tuple(range(1, 8))
    repeats = 20000
    run_case(
        f"contains_pattern3 (m=15 avoider, x{repeats})",
        lambda mod: lambda: sum(
            mod.contains_pattern3(avoider, (3, 2, 1)) for _ in range(repeats)
        ),
    )
    run_case(
        f"count_avoiders (n={n}, pattern 321)",
        lambda mod: lambda: mod.count_avoiders(n, ((3, 2, 1),), None, None),
    )
    run_case(
        f"count_avoiders (n={n}, pair 132+213)",
        lambda mod: lambda: mod.count_avoiders(n, ((1, 3, 2), (2, 1, 3)), None, None),
    )
    run_case(
        f"avoidance_profile (n={n}, all six patterns)",
        lambda mod: lambda: mod.avoidance_profile(n, None),
    )
    tsets = staircase_sets(8)
    run_case(
        f"h_of_tset ({len(tsets)} staircase sets, n=8)",
        lambda mod: lambda: sum(2 ** mod.h_of_tset(t) for t in tsets),
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
