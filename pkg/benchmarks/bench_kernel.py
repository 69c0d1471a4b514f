#!/usr/bin/env python3
"""Benchmark the compiled search kernel against the pure-Python fallback.

Runs identical exact-solve workloads through both kernels and reports wall
time per backend plus the speedup.  Results are also cross-checked: both
backends must return identical values on every instance.

Usage:
    python benchmarks/bench_kernel.py           # standard workload
    python benchmarks/bench_kernel.py --quick   # smaller workload
"""

from __future__ import annotations

import argparse
import sys
import time

from domchrom import _kernel_py
from domchrom.generators import free_trees, orientations, path
from domchrom.solver import solve_exact

try:
    from domchrom import _kernel as _kernel_c
except ImportError:
    _kernel_c = None


def build_workload(quick: bool):
    instances = []
    path_n = 9 if quick else 12
    instances.extend(orientations(path(path_n)))
    tree_n = 7 if quick else 8
    for base in free_trees(tree_n):
        instances.extend(orientations(base))
    return instances


def run(kernel, instances):
    start = time.perf_counter()
    chis = [solve_exact(t, kernel=kernel).chi for t in instances]
    return time.perf_counter() - start, chis


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workload")
    args = parser.parse_args()

    instances = build_workload(args.quick)
    print(f"workload: {len(instances)} exact solves (all orientations of a "
          f"{9 if args.quick else 12}-vertex path and of every "
          f"{7 if args.quick else 8}-vertex tree)")

    py_time, py_chis = run(_kernel_py, instances)
    print(f"pure python : {py_time:8.2f} s  "
          f"({1e3 * py_time / len(instances):7.3f} ms/solve)")

    if _kernel_c is None:
        print("compiled    : not built (pip install -e . with Cython available)")
        return 0

    c_time, c_chis = run(_kernel_c, instances)
    print(f"compiled    : {c_time:8.2f} s  "
          f"({1e3 * c_time / len(instances):7.3f} ms/solve)")
    if c_chis != py_chis:
        print("ERROR: backends disagree", file=sys.stderr)
        return 1
    print(f"speedup     : {py_time / c_time:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
