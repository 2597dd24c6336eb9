"""Series analysis: peak finding, revival detection, period and width limits.

Revival stations are the four named fractions of the revival time,
T_r/4, T_r/2, 3T_r/4 and T_r. A station is classified

    full        a detected peak within +-window of the station reaches at
                least `threshold` times the reference value,
    fractional  a sufficiently prominent peak sits in the window but stays
                below that,
    absent      no sufficiently prominent peak in the window.

The reference value is the series' initial value when it is nonzero
(|A(0)|^2 = 1 for autocorrelation strength) and the series maximum
otherwise (currents start at zero), so classifications are invariant under
rescaling the series by a positive constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import E_CHARGE, HBAR, FieldParams
from .observables import (ObservableSeries, TimeGrid, current_single_band,
                          current_two_band)
from .spectrum import SpectrumModel, TimeScales, timescales
from .wavepacket import PacketSpec, build_weights

STATION_FRACTIONS = (0.25, 0.5, 0.75, 1.0)

# Calibrated default: genuine fractional revivals recover about half of the
# reference value, background fluctuations of delocalized packets stay below
# ~0.4 of it (see tests for the two regimes this separates).
DEFAULT_MIN_PROMINENCE = 0.4

# A revival bump this far below the series maximum is treated as beyond
# log-scale visibility (20 decades of dynamic range).
LOG_VISIBILITY_FLOOR = 1e-20


@dataclass(frozen=True)
class Peak:
    """A local maximum: location [s], height and prominence (series units)."""

    time: float
    value: float
    prominence: float


@dataclass(frozen=True)
class StationResult:
    fraction: float
    time: float
    peak: Peak | None
    classification: str  # full | fractional | absent


@dataclass(frozen=True)
class RevivalReport:
    predicted_t_revival: float
    stations: tuple[StationResult, ...]

    def classification(self, fraction: float) -> str:
        for st in self.stations:
            if st.fraction == fraction:
                return st.classification
        raise KeyError(f"no station at fraction {fraction}")


def _require_real(series: ObservableSeries) -> np.ndarray:
    v = np.asarray(series.values)
    if np.iscomplexobj(v):
        raise ValueError("peak analysis needs a real series; "
                         "take |.|^2 of the autocorrelation first")
    return v.astype(np.float64)


def find_peaks(series: ObservableSeries, min_prominence: float) -> list[Peak]:
    """Local maxima with at least the given (absolute) prominence.

    A sample is a peak when it exceeds both neighbours; on a flat plateau
    the leftmost sample wins. The prominence of a peak is its height above
    the higher of the two valley floors separating it from higher ground
    (or the series ends). Output is ordered by time.
    """
    v = _require_real(series)
    if v.size < 3:
        raise ValueError(f"need at least 3 samples to find peaks, got {v.size}")
    times = series.grid.times
    peaks: list[Peak] = []
    i = 1
    while i < v.size - 1:
        if v[i] > v[i - 1]:
            j = i
            while j + 1 < v.size and v[j + 1] == v[j]:
                j += 1
            if j < v.size - 1 and v[j + 1] < v[j]:
                prom = _prominence(v, i)
                if prom >= min_prominence:
                    peaks.append(Peak(time=float(times[i]), value=float(v[i]),
                                      prominence=prom))
            i = j + 1
        else:
            i += 1
    return peaks


def _prominence(v: np.ndarray, p: int) -> float:
    left_min = v[p]
    i = p - 1
    while i >= 0 and v[i] <= v[p]:
        left_min = min(left_min, v[i])
        i -= 1
    right_min = v[p]
    i = p + 1
    while i < v.size and v[i] <= v[p]:
        right_min = min(right_min, v[i])
        i += 1
    return float(v[p] - max(left_min, right_min))


def _reference_value(v: np.ndarray) -> float:
    ref = abs(float(v[0]))
    if ref == 0.0:
        ref = float(np.max(np.abs(v)))
    if ref == 0.0:
        raise ValueError("series is identically zero; nothing to classify")
    return ref


def detect_revivals(series: ObservableSeries, scales: TimeScales,
                    window: float = 0.05, threshold: float = 0.5,
                    min_prominence: float = DEFAULT_MIN_PROMINENCE) -> RevivalReport:
    """Classify the four revival stations on a real series.

    window and threshold are relative: a peak belongs to a station when it
    lies within +-window of the station time, and counts as a full revival
    when its value reaches threshold times the reference value.
    min_prominence is likewise a fraction of the reference value.
    """
    v = _require_real(series)
    t_r = scales.t_revival
    if series.grid.t_end < 1.05 * t_r:
        raise ValueError(
            f"series must span at least 1.05 * t_revival = {1.05 * t_r:.3e} s, "
            f"ends at {series.grid.t_end:.3e} s")
    ref = _reference_value(v)
    peaks = find_peaks(series, min_prominence * ref)
    stations = []
    for frac in STATION_FRACTIONS:
        t_st = frac * t_r
        near = [p for p in peaks if abs(p.time - t_st) <= window * t_st]
        if not near:
            stations.append(StationResult(frac, t_st, None, "absent"))
            continue
        best = max(near, key=lambda p: p.value)
        cls = "full" if best.value >= threshold * ref else "fractional"
        stations.append(StationResult(frac, t_st, best, cls))
    return RevivalReport(predicted_t_revival=t_r, stations=tuple(stations))


def measure_period(series: ObservableSeries, window: tuple[float, float],
                   check_spectrum: bool = True) -> float:
    """Oscillation period within a time window [s].

    Estimated as twice the mean spacing of sign changes (linearly
    interpolated between samples); needs at least 3 crossings. When
    check_spectrum is on, a discrete-spectrum estimate (windowed, zero-padded
    periodogram with parabolic peak refinement) must agree within 5%,
    otherwise the window is considered ambiguous and this raises.
    """
    v = _require_real(series)
    t = series.grid.times
    mask = (t >= window[0]) & (t <= window[1])
    tw, vw = t[mask], v[mask]
    if tw.size < 4:
        raise ValueError("window contains too few samples")
    sgn = np.sign(vw)
    idx = np.where((sgn[:-1] != sgn[1:]) & (sgn[:-1] != 0))[0]
    if idx.size < 3:
        raise ValueError(f"need at least 3 zero crossings in the window, got {idx.size}")
    t_cross = tw[idx] - vw[idx] * (tw[idx + 1] - tw[idx]) / (vw[idx + 1] - vw[idx])
    period = 2.0 * float(np.mean(np.diff(t_cross)))
    if check_spectrum:
        alt = dominant_period(series, window)
        if abs(alt - period) > 0.05 * period:
            raise ValueError(
                f"period estimates disagree: crossings {period:.4e} s vs "
                f"spectrum {alt:.4e} s")
    return period


def dominant_period(series: ObservableSeries, window: tuple[float, float],
                    pad_factor: int = 32) -> float:
    """Period of the strongest spectral component within a time window [s]."""
    v = _require_real(series)
    t = series.grid.times
    mask = (t >= window[0]) & (t <= window[1])
    vw = v[mask]
    if vw.size < 8:
        raise ValueError("window contains too few samples for a spectrum")
    vw = vw - vw.mean()
    spec = np.abs(np.fft.rfft(vw * np.hanning(vw.size), n=pad_factor * vw.size))
    freqs = np.fft.rfftfreq(pad_factor * vw.size, d=series.grid.spacing)
    i = int(np.argmax(spec[1:])) + 1
    if 1 <= i < spec.size - 1:
        a, b, c = spec[i - 1], spec[i], spec[i + 1]
        denom = a - 2.0 * b + c
        shift = 0.5 * (a - c) / denom if denom != 0.0 else 0.0
        f_peak = freqs[i] + shift * (freqs[1] - freqs[0])
    else:
        f_peak = freqs[i]
    if f_peak <= 0.0:
        raise ValueError("no oscillatory component found in the window")
    return 1.0 / float(f_peak)


def station_visible_log(series: ObservableSeries, scales: TimeScales,
                        fraction: float = 0.25, window: float = 0.05,
                        floor: float = LOG_VISIBILITY_FLOOR) -> bool:
    """Log-scale visibility of one revival station on a current series.

    True when max |values| within +-window of the station stays above
    floor * max |values| of the whole series, i.e. the revival bump would
    still show on a logarithmic plot with -log10(floor) decades of range.
    """
    v = np.abs(_require_real(series))
    t = series.grid.times
    t_st = fraction * scales.t_revival
    mask = np.abs(t - t_st) <= window * t_st
    if not mask.any():
        raise ValueError("station window lies outside the series")
    return float(v[mask].max()) >= floor * float(v.max())


def default_gamma_criterion(series: ObservableSeries, scales: TimeScales) -> bool:
    """Shipped revival-visibility predicate for the width limit.

    The earliest named station (T_r/4) must remain log-scale visible within
    LOG_VISIBILITY_FLOOR of the series maximum. Late stations disappear first
    under the exp(-2*Gamma*t/hbar) envelope, so early-time structure is the
    last survivor and the natural visibility anchor.
    """
    return station_visible_log(series, scales, fraction=0.25)


def estimate_gamma_max(packet: PacketSpec, field: FieldParams,
                       criterion: Callable[[ObservableSeries, TimeScales], bool]
                       | None = None,
                       gamma_hi: float = 20e-3 * E_CHARGE,
                       tol: float = 0.05e-3 * E_CHARGE,
                       n_samples: int = 40001) -> float:
    """Largest level width [J] at which current revivals stay visible.

    Bisects the monotone predicate `criterion(broadened j_y series, scales)`
    over Gamma in [0, gamma_hi] down to the given tolerance (default
    0.05 meV). The criterion must hold at Gamma = 0 and is assumed monotone
    (a larger width never improves visibility; true for the global
    exp(-2*Gamma*t/hbar) envelope). The default criterion is
    :func:`default_gamma_criterion`.
    """
    if criterion is None:
        criterion = default_gamma_criterion
    model = SpectrumModel(field)
    scales = timescales(model, packet.n0)
    table = build_weights(packet)
    grid = TimeGrid(0.0, 1.06 * scales.t_revival, n_samples)
    if packet.bands == "both":
        _, jy = current_two_band(table, model, grid)
    else:
        s = +1 if packet.bands == "positive" else -1
        _, jy = current_single_band(table, model, grid, s)

    def broadened(gamma: float) -> ObservableSeries:
        env = np.exp(-2.0 * gamma * grid.times / HBAR)
        return ObservableSeries(grid=grid, values=jy.values * env,
                                kind=jy.kind, units=jy.units)

    if not criterion(broadened(0.0), scales):
        raise ValueError("revivals are not visible even at zero broadening; "
                         "the criterion cannot bound the width")
    lo, hi = 0.0, gamma_hi
    if criterion(broadened(hi), scales):
        return hi  # visible across the whole bracket
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if criterion(broadened(mid), scales):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
