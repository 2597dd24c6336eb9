"""Hot numeric kernels: JIT-compiled with numba, pure-numpy fallback.

The fallback is selected automatically when numba is missing, or forced by
setting the environment variable GRAPHENE_REVIVALS_NO_NUMBA=1 before import.
Both paths return identical results up to floating-point summation order;
benchmarks/bench_kernels.py compares their speed.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    numba = None
    HAS_NUMBA = False

_ENV_FLAG = "GRAPHENE_REVIVALS_NO_NUMBA"
USE_NUMBA = HAS_NUMBA and os.environ.get(_ENV_FLAG, "").lower() not in ("1", "true", "yes")


def backend() -> str:
    """Name of the active kernel backend: 'numba' or 'numpy'."""
    return "numba" if USE_NUMBA else "numpy"


# --- weighted trigonometric series -----------------------------------------
#
# trig_series(w, om, t)[0][k] = sum_j w[j] * cos(om[j] * t[k])
# trig_series(w, om, t)[1][k] = sum_j w[j] * sin(om[j] * t[k])
#
# One kernel serves every observable: autocorrelation (weights = level
# populations, om = E_n/hbar), currents (weights = first off-diagonal
# overlaps, om = transition frequencies).


def _trig_series_np(weights, omegas, times):
    phases = np.outer(times, omegas)
    return np.cos(phases) @ weights, np.sin(phases) @ weights


def _trig_series_loop(weights, omegas, times):
    cos_out = np.empty(times.size)
    sin_out = np.empty(times.size)
    for k in range(times.size):
        acc_c = 0.0
        acc_s = 0.0
        for j in range(omegas.size):
            arg = omegas[j] * times[k]
            acc_c += weights[j] * np.cos(arg)
            acc_s += weights[j] * np.sin(arg)
        cos_out[k] = acc_c
        sin_out[k] = acc_s
    return cos_out, sin_out


# --- normalized Hermite-Gaussian recurrence ---------------------------------
#
# hermite_sweep(n, xi) evaluates h_m(xi) = exp(-xi^2/2) H_m(xi) / C_m,
# C_m = sqrt(2^m m! sqrt(pi)), for m = n-1 and m = n.
#
# The three-term recurrence runs on the normalized polynomial part
# p_m = H_m / C_m,
#
#   p_m = xi*sqrt(2/m)*p_{m-1} - sqrt((m-1)/m)*p_{m-2},
#
# and the Gaussian is attached at the end in log space. Seeding the
# recurrence with exp(-xi^2/2) directly would underflow to garbage for
# |xi| beyond ~38 and get amplified near the turning point; p_m is the
# dominant solution there, so the forward sweep is stable, and a carried
# base-2 exponent keeps it in range when p_m ~ exp(+xi^2/2) grows past
# double precision. The results stay bounded (|h_m| < 0.82 for every m).

_RESCALE_LIMIT = 2.0 ** 500
_RESCALE_FACTOR = 2.0 ** -500
_RESCALE_STRIDE = 16  # growth per step stays far below 2^32; 16 steps are safe
_LN2 = float(np.log(2.0))


def _hermite_sweep_np(n, xi):
    p_prev = np.zeros_like(xi)  # p_{-1} == 0
    p = np.full_like(xi, np.pi ** -0.25)  # p_0
    expo = np.zeros_like(xi)  # carried base-2 exponent
    for m in range(1, n + 1):
        p_prev, p = p, xi * np.sqrt(2.0 / m) * p - np.sqrt((m - 1.0) / m) * p_prev
        if m % _RESCALE_STRIDE == 0:
            big = np.abs(p) > _RESCALE_LIMIT
            if big.any():
                # powers of two rescale exactly; the timing is irrelevant
                p = np.where(big, p * _RESCALE_FACTOR, p)
                p_prev = np.where(big, p_prev * _RESCALE_FACTOR, p_prev)
                expo = np.where(big, expo + 500.0, expo)
    scale = np.exp(expo * _LN2 - 0.5 * xi * xi)
    return p_prev * scale, p * scale


def _hermite_sweep_loop(n, xi):
    size = xi.size
    p_prev = np.zeros(size)
    p = np.full(size, np.pi ** -0.25)
    expo = np.zeros(size)
    for m in range(1, n + 1):
        a = np.sqrt(2.0 / m)
        b = np.sqrt((m - 1.0) / m)
        for i in range(size):
            nxt = xi[i] * a * p[i] - b * p_prev[i]
            p_prev[i] = p[i]
            p[i] = nxt
        if m % _RESCALE_STRIDE == 0:
            for i in range(size):
                if np.abs(p[i]) > _RESCALE_LIMIT:
                    p[i] *= _RESCALE_FACTOR
                    p_prev[i] *= _RESCALE_FACTOR
                    expo[i] += 500.0
    below = np.empty(size)
    at = np.empty(size)
    for i in range(size):
        scale = np.exp(expo[i] * _LN2 - 0.5 * xi[i] * xi[i])
        below[i] = p_prev[i] * scale
        at[i] = p[i] * scale
    return below, at


if HAS_NUMBA:
    _trig_series_nb = numba.njit(cache=True)(_trig_series_loop)
    _hermite_sweep_nb = numba.njit(cache=True)(_hermite_sweep_loop)


def trig_series(weights: np.ndarray, omegas: np.ndarray, times: np.ndarray):
    """(sum_j w_j cos(om_j t_k), sum_j w_j sin(om_j t_k)) over the time grid."""
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    omegas = np.ascontiguousarray(omegas, dtype=np.float64)
    times = np.ascontiguousarray(times, dtype=np.float64)
    if weights.shape != omegas.shape:
        raise ValueError("weights and omegas must have the same length")
    if USE_NUMBA:
        return _trig_series_nb(weights, omegas, times)
    return _trig_series_np(weights, omegas, times)


def hermite_sweep(n: int, xi: np.ndarray):
    """(h_{n-1}(xi), h_n(xi)) for the normalized Hermite-Gaussian functions."""
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    xi = np.ascontiguousarray(xi, dtype=np.float64)
    if USE_NUMBA:
        return _hermite_sweep_nb(n, xi)
    return _hermite_sweep_np(n, xi)
