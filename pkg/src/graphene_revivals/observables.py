"""Time series of the autocorrelation and electric-current expectations.

All series are sums of weighted trigonometric terms over the populated
levels, with phases E*t/hbar:

    A(t)  = sum_{n,s} U_{n,n} exp(-i E_{n,s} t / hbar)
    j_x(t) = s * sum_n U_{n-1,n} cos[(E_n - E_{n-1}) t / hbar]   (one band)
    j_y(t) =     sum_n U_{n-1,n} sin[(E_n - E_{n-1}) t / hbar]   (one band)
    j_y(t) =     sum_n U_{n-1,n} { sin[(E_n + E_{n-1}) t / hbar]
                                 + sin[(E_n - E_{n-1}) t / hbar] }  (two bands)

with j_x identically zero in the two-band case. Currents are reported in
units of e*v_F. Level broadening with a level-independent width Gamma
multiplies every current term by exp(-2*Gamma*t/hbar), which commutes with
the sum and is applied as a global envelope; the per-term form is kept
behind a flag. The current sums run over transitions n-1 -> n with n >= 1,
while the n = 0 population does enter A(t).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import trig_series
from .constants import HBAR
from .spectrum import SpectrumModel
from .wavepacket import WeightTable

CURRENT_UNITS = "e*v_F"


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid over [t_start, t_end] with n_samples points [s]."""

    t_start: float
    t_end: float
    n_samples: int = 4096

    def __post_init__(self):
        if self.t_start < 0.0 or self.t_end <= self.t_start:
            raise ValueError(
                f"need t_end > t_start >= 0, got [{self.t_start}, {self.t_end}]")
        if self.n_samples < 2:
            raise ValueError(f"need at least 2 samples, got {self.n_samples}")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_samples)

    @property
    def spacing(self) -> float:
        return (self.t_end - self.t_start) / (self.n_samples - 1)


@dataclass(frozen=True)
class ObservableSeries:
    """A sampled observable: complex autocorrelation or real current."""

    grid: TimeGrid
    values: np.ndarray
    kind: str  # autocorrelation | jx | jy
    units: str  # dimensionless | e*v_F


@dataclass(frozen=True)
class BroadeningModel:
    """Level-independent Landau-level width Gamma [J]; zero = no broadening."""

    gamma: float = 0.0

    def __post_init__(self):
        if self.gamma < 0.0:
            raise ValueError(f"broadening must be non-negative, got {self.gamma} J")


def _level_frequencies(table: WeightTable, model: SpectrumModel) -> np.ndarray:
    """E_n / hbar for the populated levels [rad/s]."""
    return model.omega * np.sqrt(table.levels.astype(np.float64))


def _autocorr_values(table: WeightTable, model: SpectrumModel,
                     times: np.ndarray) -> np.ndarray:
    om = _level_frequencies(table, model)
    cos_part, sin_part = trig_series(table.diag, om, times)
    if table.band_content == "both":
        # e^{-i om t} + e^{+i om t} summed with equal per-band weights
        return 2.0 * cos_part + 0.0j
    s = +1 if table.band_content == "positive" else -1
    return cos_part - 1j * s * sin_part


def autocorrelation(table: WeightTable, model: SpectrumModel, grid: TimeGrid,
                    broadening: BroadeningModel | None = None) -> ObservableSeries:
    """Overlap of the evolved packet with itself at t = 0; |A(0)| = 1.

    broadening, if given, damps each amplitude term by exp(-Gamma*t/hbar)
    (the complex-energy picture applied to the state itself). This is an
    extension beyond the current formulas and is off by default.
    """
    times = grid.times
    values = _autocorr_values(table, model, times)
    if broadening is not None and broadening.gamma != 0.0:
        values = values * np.exp(-broadening.gamma * times / HBAR)
    return ObservableSeries(grid=grid, values=values, kind="autocorrelation",
                            units="dimensionless")


def _transition_frequencies(table, model):
    """((E_n - E_{n-1})/hbar, (E_n + E_{n-1})/hbar) for n = n_min+1..n_max."""
    om = _level_frequencies(table, model)
    return om[1:] - om[:-1], om[1:] + om[:-1]


def _envelope(gamma: float, times: np.ndarray) -> np.ndarray:
    return np.exp(-2.0 * gamma * times / HBAR)


def _per_term_current(weights, omegas, gamma, times, trig):
    """Reference path: apply exp(-(Gamma_n + Gamma_{n-1}) t/hbar) inside the sum."""
    out = np.zeros_like(times)
    for w, om in zip(weights, omegas):
        out += w * trig(om * times) * np.exp(-2.0 * gamma * times / HBAR)
    return out


def _single_band_values(table, model, times, s, gamma=0.0, per_term=False):
    d_om, _ = _transition_frequencies(table, model)
    if per_term:
        jx = s * _per_term_current(table.offdiag, d_om, gamma, times, np.cos)
        jy = _per_term_current(table.offdiag, d_om, gamma, times, np.sin)
        return jx, jy
    cos_part, sin_part = trig_series(table.offdiag, d_om, times)
    env = _envelope(gamma, times)
    return s * cos_part * env, sin_part * env


def _two_band_values(table, model, times, gamma=0.0, per_term=False):
    d_om, s_om = _transition_frequencies(table, model)
    if per_term:
        jy = (_per_term_current(table.offdiag, s_om, gamma, times, np.sin)
              + _per_term_current(table.offdiag, d_om, gamma, times, np.sin))
    else:
        _, sin_fast = trig_series(table.offdiag, s_om, times)
        _, sin_slow = trig_series(table.offdiag, d_om, times)
        jy = (sin_fast + sin_slow) * _envelope(gamma, times)
    return np.zeros_like(times), jy


def current_single_band(table: WeightTable, model: SpectrumModel, grid: TimeGrid,
                        s: int, broadening: BroadeningModel | None = None,
                        per_term_envelope: bool = False,
                        ) -> tuple[ObservableSeries, ObservableSeries]:
    """Cyclotron currents (j_x, j_y) of a one-band packet, in units of e*v_F.

    The table must have been built with the matching single band. With a
    level-independent width the broadening envelope factors out of the sum;
    per_term_envelope=True keeps the per-term form instead (same result,
    kept for future level-dependent widths).
    """
    if s not in (+1, -1):
        raise ValueError(f"band index s must be +1 or -1, got {s}")
    expected = "positive" if s == +1 else "negative"
    if table.band_content != expected:
        raise ValueError(
            f"table holds {table.band_content!r} band content, need {expected!r}")
    gamma = 0.0 if broadening is None else broadening.gamma
    jx, jy = _single_band_values(table, model, grid.times, s, gamma,
                                 per_term_envelope)
    return (ObservableSeries(grid=grid, values=jx, kind="jx", units=CURRENT_UNITS),
            ObservableSeries(grid=grid, values=jy, kind="jy", units=CURRENT_UNITS))


def current_two_band(table: WeightTable, model: SpectrumModel, grid: TimeGrid,
                     broadening: BroadeningModel | None = None,
                     per_term_envelope: bool = False,
                     ) -> tuple[ObservableSeries, ObservableSeries]:
    """Currents of an equal-weight two-band packet, in units of e*v_F.

    j_x vanishes identically (returned as exact zeros). j_y carries both the
    slow intraband transitions and the fast interband (zitterbewegung) terms.
    Values are the unit-norm state's expectation; the per-band table weights
    make the prefactor 1.
    """
    if table.band_content != "both":
        raise ValueError(
            f"table holds {table.band_content!r} band content, need 'both'")
    gamma = 0.0 if broadening is None else broadening.gamma
    jx, jy = _two_band_values(table, model, grid.times, gamma, per_term_envelope)
    return (ObservableSeries(grid=grid, values=jx, kind="jx", units=CURRENT_UNITS),
            ObservableSeries(grid=grid, values=jy, kind="jy", units=CURRENT_UNITS))


def total_current_both_valleys(per_valley: ObservableSeries) -> ObservableSeries:
    """Total current from both degenerate valleys: twice the one-valley series.

    The two valleys host distinct eigenspinors but identical spectra, and a
    packet built with common coefficients contributes equally from each.
    """
    return ObservableSeries(grid=per_valley.grid, values=2.0 * per_valley.values,
                            kind=per_valley.kind, units=per_valley.units)


def abs_squared(series: ObservableSeries) -> ObservableSeries:
    """|values|^2 as a real series (e.g. revival strength |A(t)|^2)."""
    return ObservableSeries(grid=series.grid,
                            values=np.abs(series.values) ** 2,
                            kind=series.kind, units=series.units)
