"""Benchmark the numba kernels against the pure-numpy fallback.

Run: python benchmarks/bench_kernels.py
(the env flag GRAPHENE_REVIVALS_NO_NUMBA only selects the dispatch default;
this script calls both implementations directly.)
"""

from __future__ import annotations

import time

import numpy as np

from graphene_revivals import _kernels


def _time(fn, *args, n_warmup=2, n_runs=7):
    for _ in range(n_warmup):
        fn(*args)
    best = np.inf
    for _ in range(n_runs):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_trig_series(n_times=200_000, n_levels=60):
    rng = np.random.default_rng(0)
    w = rng.random(n_levels)
    om = 1e14 * (1.0 + rng.random(n_levels))
    t = np.linspace(0.0, 2e-11, n_times)
    print(f"trig_series: {n_times} samples x {n_levels} levels")
    t_np = _time(_kernels._trig_series_np, w, om, t)
    print(f"  numpy: {t_np * 1e3:8.2f} ms")
    if _kernels.HAS_NUMBA:
        t_nb = _time(_kernels._trig_series_nb, w, om, t)
        print(f"  numba: {t_nb * 1e3:8.2f} ms   speedup {t_np / t_nb:.2f}x")
    else:
        print("  numba: not installed")


def bench_hermite(n=10_000, n_points=2_000):
    xi = np.linspace(-50.0, 50.0, n_points)
    print(f"hermite_sweep: order {n} at {n_points} points")
    t_np = _time(_kernels._hermite_sweep_np, n, xi)
    print(f"  numpy: {t_np * 1e3:8.2f} ms")
    if _kernels.HAS_NUMBA:
        t_nb = _time(_kernels._hermite_sweep_nb, n, xi)
        print(f"  numba: {t_nb * 1e3:8.2f} ms   speedup {t_np / t_nb:.2f}x")
    else:
        print("  numba: not installed")


def main():
    print(f"active dispatch backend: {_kernels.backend()}")
    bench_trig_series()
    bench_hermite()


if __name__ == "__main__":
    main()
