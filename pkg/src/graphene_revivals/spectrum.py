"""Landau-level spectrum of Dirac electrons and the derived time scales.

The spectrum E_{n,s} = s * hbar*Omega * sqrt(n) (s = +1 conduction band,
s = -1 valence band) is strongly anharmonic, so a packet centred on level
n0 carries three distinct periods, all obtained from the local Taylor
expansion of E_n around n0:

    T_cl = 2*pi*hbar / |E'(n0)|    classical cyclotron period
    T_r  = 4*pi*hbar / |E''(n0)|   revival time
    T_zb = pi*hbar / E(n0)         interband (zitterbewegung) period

Their ratios are field-independent: T_r/T_cl = T_cl/T_zb = 4*n0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import HBAR, FieldParams, omega as _omega


@dataclass(frozen=True)
class SpectrumModel:
    """Field parameters plus the cached level-spacing frequency."""

    params: FieldParams
    omega: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "omega", _omega(self.params))


@dataclass(frozen=True)
class TimeScales:
    """The three characteristic periods of a packet centred on one level [s]."""

    t_classical: float
    t_revival: float
    t_zitterbewegung: float


def landau_energy(model: SpectrumModel, n, s: int):
    """Energy of Landau level (n, s): s * hbar*Omega * sqrt(n) [J].

    n may be a scalar or an integer array; all entries must be >= 0.
    """
    if s not in (+1, -1):
        raise ValueError(f"band index s must be +1 or -1, got {s}")
    n_arr = np.asarray(n)
    if np.any(n_arr < 0):
        raise ValueError("level index n must be non-negative")
    e = s * HBAR * model.omega * np.sqrt(n_arr)
    return e if n_arr.ndim else float(e)


def spectrum_derivatives(model: SpectrumModel, n0: int) -> tuple[float, float]:
    """First and second derivatives of E_n = hbar*Omega*sqrt(n) at n0.

    Returns (E', E'') in (J per level, J per level^2):
    E' = hbar*Omega / (2 sqrt(n0)),  E'' = -hbar*Omega / (4 n0^{3/2}).
    """
    if n0 < 1:
        raise ValueError(f"derivatives require n0 >= 1 (singular at n = 0), got {n0}")
    e_scale = HBAR * model.omega
    d1 = e_scale / (2.0 * math.sqrt(n0))
    d2 = -e_scale / (4.0 * n0 ** 1.5)
    return d1, d2


def timescales(model: SpectrumModel, n0: int) -> TimeScales:
    """Classical, revival and zitterbewegung periods for a packet at n0."""
    d1, d2 = spectrum_derivatives(model, n0)
    e_n0 = landau_energy(model, n0, +1)
    return TimeScales(
        t_classical=2.0 * math.pi * HBAR / abs(d1),
        t_revival=4.0 * math.pi * HBAR / abs(d2),
        t_zitterbewegung=math.pi * HBAR / e_n0,
    )


def zb_period_with_gap(model: SpectrumModel, n0: int) -> float:
    """Interband period when the spectrum carries a gap [s].

    The interband splitting grows from E_{n0} to sqrt(E_{n0}^2 + E_gap^2),
    shortening the period to pi*hbar / sqrt(E_{n0}^2 + E_gap^2); reduces to
    the gapless zitterbewegung period when the gap vanishes. The classical
    and revival periods are untouched (they are spectrum derivatives).
    """
    if n0 < 1:
        raise ValueError(f"interband period requires n0 >= 1, got {n0}")
    e_n0 = landau_energy(model, n0, +1)
    return math.pi * HBAR / math.hypot(e_n0, model.params.gap_energy)
