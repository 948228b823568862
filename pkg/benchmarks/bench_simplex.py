"""Compare the compiled simplex kernel against the numpy fallback.

Usage: python3 benchmarks/bench_simplex.py [--sizes 40,80,120] [--repeat 3]

Generates dense feasible LPs of growing size and times solve_dense under
each kernel. Pivot counts must agree exactly; that is asserted, not just
reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from planopt.lp import _kernel_py, backend
from planopt.lp.simplex import solve_dense

try:
    from planopt.lp import _speedups
except ImportError:
    _speedups = None


def make_lp(rng, n, m):
    # Box-bounded with a known interior point, so every instance is feasible.
    A = rng.uniform(-2.0, 2.0, size=(m, n))
    x0 = rng.uniform(0.5, 1.5, size=n)
    b = A @ x0 + rng.uniform(0.1, 2.0, size=m)
    rel = ["<="] * m
    c = rng.uniform(-1.0, 1.0, size=n)
    lb = np.zeros(n)
    ub = np.full(n, 10.0)
    return c, A, rel, b, lb, ub


def run(kernel, cases, repeat):
    backend.run_phase = kernel.run_phase
    best = []
    pivots = []
    for case in cases:
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            status, x, iters = solve_dense(*case)
            times.append(time.perf_counter() - t0)
        assert status == "optimal"
        best.append(min(times))
        pivots.append(iters)
    return best, pivots


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="40,80,120,160")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = np.random.default_rng(7)
    cases = [make_lp(rng, n, n) for n in sizes]

    pure_t, pure_p = run(_kernel_py, cases, args.repeat)
    if _speedups is None:
        print("compiled kernel not built; showing pure kernel only")
        for n, t, p in zip(sizes, pure_t, pure_p):
            print(f"n=m={n:4d}  pure {t * 1e3:8.2f} ms  ({p} pivots)")
        return

    comp_t, comp_p = run(_speedups, cases, args.repeat)
    print(f"{'size':>6} {'pivots':>7} {'pure ms':>9} {'compiled ms':>12} {'speedup':>8}")
    for n, tp, tc, pp, pc in zip(sizes, pure_t, comp_t, pure_p, comp_p):
        assert pp == pc, f"kernel divergence at n={n}: {pp} vs {pc} pivots"
        print(f"{n:6d} {pp:7d} {tp * 1e3:9.2f} {tc * 1e3:12.2f} {tp / tc:8.2f}x")


if __name__ == "__main__":
    main()
