"""Timing comparison of the compiled and pure-numpy kernel paths.

Runs the three hot kernels on representative workloads and prints a small
table of best-of-N wall times for each backend.  When the compiled backend
is unavailable (numba not installed, or disabled via RATBEZ_NO_NUMBA),
only the numpy column is reported.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ratbez import build_derivative_form, counterexample_family
from ratbez._kernels import (
    BACKEND,
    USING_NUMBA,
    _np_decasteljau_grid,
    _np_elevate_chain,
    _np_max_norm_ratio,
)

if USING_NUMBA:
    from ratbez._kernels import (
        _nb_decasteljau_grid,
        _nb_elevate_chain,
        _nb_max_norm_ratio,
    )


def best_of(repeats, fn, *args):
    """Best wall time over `repeats` calls, in seconds."""
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def workloads():
    """(name, args) triples sized so each case runs in tens of milliseconds."""
    # degree-40 homogeneous derivative data evaluated over a dense grid
    form = build_derivative_form(counterexample_family(20))
    homog = np.ascontiguousarray(form.homogeneous())
    ts = np.linspace(0.0, 1.0, 100_001)

    # a long elevation chain on the same coefficients
    steps = 1000

    # ratio scan over the elevated rows
    elevated = _np_elevate_chain(homog, steps)
    nums = np.ascontiguousarray(elevated[:, :-1])
    wts = np.ascontiguousarray(elevated[:, -1])

    return [
        ("decasteljau_grid (deg 40 x 1e5 pts)", "grid", (homog, ts)),
        (f"elevate_chain   (deg 40, {steps} steps)", "elevate", (homog, steps)),
        (f"max_norm_ratio  ({wts.size} rows, p=2)", "ratio", (nums, wts, 2.0)),
    ]


NUMPY_FNS = {
    "grid": _np_decasteljau_grid,
    "elevate": _np_elevate_chain,
    "ratio": _np_max_norm_ratio,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats per case (best is reported)")
    args = parser.parse_args()
    if args.repeats < 1:
        parser.error("--repeats must be at least 1")

    numba_fns = {}
    if USING_NUMBA:
        numba_fns = {
            "grid": _nb_decasteljau_grid,
            "elevate": _nb_elevate_chain,
            "ratio": _nb_max_norm_ratio,
        }

    print(f"active backend: {BACKEND}")
    cases = workloads()

    if USING_NUMBA:
        # compile outside the timed region
        for _, key, fn_args in cases:
            numba_fns[key](*fn_args)
        header = f"{'kernel':<40} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    else:
        header = f"{'kernel':<40} {'numpy':>10}"
    print(header)
    print("-" * len(header))

    for name, key, fn_args in cases:
        np_time = best_of(args.repeats, NUMPY_FNS[key], *fn_args)
        if USING_NUMBA:
            nb_time = best_of(args.repeats, numba_fns[key], *fn_args)
            print(f"{name:<40} {np_time * 1e3:>8.2f}ms {nb_time * 1e3:>8.2f}ms "
                  f"{np_time / nb_time:>7.1f}x")
        else:
            print(f"{name:<40} {np_time * 1e3:>8.2f}ms")

    if not USING_NUMBA:
        print("\ncompiled backend unavailable; numpy column only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
