#!/usr/bin/env python3
"""Time the compiled kernels against the pure-python fallback.

Runs the two hot paths (series coefficient construction and the Adomian
convolution table) through both backends on identical inputs and prints
per-call timings with the speedup factor.
"""

import argparse
import time

import numpy as np

from sbvp import _kernels_py

try:
    from sbvp import _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn, repeats, number):
    """Best total time of `repeats` batches of `number` calls, per call."""
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(number):
            fn()
        best = min(best, time.perf_counter() - t0)
    return best / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=20, help="series order")
    ap.add_argument("--number", type=int, default=200, help="calls per batch")
    ap.add_argument("--repeats", type=int, default=5, help="batches per case")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    n = args.order
    u = rng.uniform(-0.5, 0.5, n + 1)
    u[0] = rng.uniform(0.75, 1.25)
    derivs = rng.uniform(-2.0, 2.0, n - 1)
    beta = float(u[0])

    cases = [
        ("cauchy_mul", lambda k: (lambda: k.cauchy_mul(u, u))),
        ("series_recip", lambda k: (lambda: k.series_recip(u))),
        ("series_exp", lambda k: (lambda: k.series_exp(u))),
        ("duan_polys", lambda k: (lambda: k.duan_polys(u, u))),
        ("build_coeffs", lambda k: (lambda: k.build_coeffs(beta, derivs, 2.0, n))),
    ]

    print(f"order={n} number={args.number} repeats={args.repeats} seed={args.seed}")
    if _kernels_c is None:
        print("compiled backend not built; timing pure python only")
        print(f"{'kernel':<14} {'python':>12}")
        for name, make in cases:
            t_py = best_of(make(_kernels_py), args.repeats, args.number)
            print(f"{name:<14} {t_py * 1e6:>10.2f}us")
        return

    print(f"{'kernel':<14} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for name, make in cases:
        t_py = best_of(make(_kernels_py), args.repeats, args.number)
        t_c = best_of(make(_kernels_c), args.repeats, args.number)
        print(
            f"{name:<14} {t_py * 1e6:>10.2f}us {t_c * 1e6:>10.2f}us "
            f"{t_py / t_c:>8.1f}x"
        )


if __name__ == "__main__":
    main()
