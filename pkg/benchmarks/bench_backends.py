#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python twin.

Times the signature tally (the hot loop behind exhaustive verification)
and one end-to-end weighted sum per size.  Run from the repo root:

    python benchmarks/bench_backends.py [max_n]
"""

import sys
import time
from fractions import Fraction

from hooktrees import families
from hooktrees.hookcalc import HookWeightFunction
from hooktrees.treeoracle import _kernel_py

try:
    from hooktrees.treeoracle import _kernel
except ImportError:
    _kernel = None


def best_of(runs, fn, *args):
    best = float("inf")
    for _ in range(runs):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def weighted_sum_with(kernel, n, family, rho):
    phi_w = [family.weight_of_degree(k) for k in range(n)]
    rho_w = [rho(h) for h in range(1, n + 1)]
    total = Fraction(0)
    for key, multiplicity in kernel.signature_counts(n).items():
        term = Fraction(multiplicity)
        for k in range(n):
            if key[k]:
                term *= phi_w[k] ** key[k]
        for h in range(n):
            if key[n + h]:
                term *= rho_w[h] ** key[n + h]
        total += term
    return total


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 13
    if _kernel is None:
        print("compiled kernel not built; timing the pure kernel only")
    fam = families.plane()
    rho = HookWeightFunction.named("1/n", max_n)

    print(f"{'n':>3} {'trees':>9} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for n in range(8, max_n + 1):
        trees = sum(_kernel_py.signature_counts(n).values())
        runs = 3 if n < 12 else 1
        py = best_of(runs, _kernel_py.signature_counts, n)
        if _kernel is not None:
            cy = best_of(runs, _kernel.signature_counts, n)
            assert _kernel.signature_counts(n) == _kernel_py.signature_counts(n)
            print(f"{n:>3} {trees:>9} {py:>9.4f}s {cy:>9.4f}s {py / cy:>7.1f}x")
        else:
            print(f"{n:>3} {trees:>9} {py:>9.4f}s {'-':>10} {'-':>8}")

    n = max_n
    py = best_of(1, weighted_sum_with, _kernel_py, n, fam, rho)
    line = f"weighted sum at n={n} (plane, rho=1/n): python {py:.4f}s"
    if _kernel is not None:
        cy = best_of(1, weighted_sum_with, _kernel, n, fam, rho)
        line += f", compiled {cy:.4f}s ({py / cy:.1f}x)"
    print(line)


if __name__ == "__main__":
    main()
