"""Gaussian-populated Landau-level packets and their overlap table.

A packet is a superposition over levels n with Gaussian amplitudes
g_n = exp(-(n-n0)^2 / (2 sigma)), optionally duplicated over the two bands.
The only quantities any observable ever needs are the level-population
overlaps U_{m,n} ~ g_m * g_n on the diagonal and the first off-diagonal;
they are stored normalized so that the total population is exactly 1.

The transverse-momentum profile of the packet factors out of every
U_{m,n} and therefore out of every observable; it is deliberately not
represented here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BANDS = ("positive", "negative", "both")


@dataclass(frozen=True)
class PacketSpec:
    """Packet parameters: central level, level-space width, band content.

    tail_tolerance bounds the relative Gaussian amplitude weight that
    truncating the level sum may discard.
    """

    n0: int
    sigma: float
    bands: str = "positive"
    tail_tolerance: float = 1e-12

    def __post_init__(self):
        if self.n0 < 1:
            raise ValueError(f"central level n0 must be >= 1, got {self.n0}")
        if not self.sigma > 0.0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.bands not in BANDS:
            raise ValueError(f"bands must be one of {BANDS}, got {self.bands!r}")
        if not 0.0 < self.tail_tolerance < 1.0:
            raise ValueError(f"tail_tolerance must be in (0, 1), got {self.tail_tolerance}")


@dataclass(frozen=True)
class WeightTable:
    """Normalized overlaps U_{m,n} over the truncated level range.

    diag[i]    = U_{n,n}   for n = n_min + i
    offdiag[i] = U_{n-1,n} for n = n_min + 1 + i

    For two-band packets the stored entries are per-band values: each band
    carries the same table and the two populations add up to 1.
    Arrays are read-only; treat instances as immutable.
    """

    n_min: int
    n_max: int
    diag: np.ndarray
    offdiag: np.ndarray
    band_content: str

    def __post_init__(self):
        if self.n_min < 0 or self.n_max < self.n_min:
            raise ValueError(f"bad level range [{self.n_min}, {self.n_max}]")
        if len(self.diag) != self.n_max - self.n_min + 1:
            raise ValueError("diag length does not match the level range")
        if len(self.offdiag) != len(self.diag) - 1:
            raise ValueError("offdiag must be one entry shorter than diag")
        if self.band_content not in BANDS:
            raise ValueError(f"band_content must be one of {BANDS}")

    @property
    def levels(self) -> np.ndarray:
        """Populated level indices n_min..n_max."""
        return np.arange(self.n_min, self.n_max + 1)

    @property
    def band_multiplicity(self) -> int:
        return 2 if self.band_content == "both" else 1

    def total_population(self) -> float:
        """Sum of U_{n,n} over all populated (n, s); equals 1 by construction."""
        return self.band_multiplicity * float(np.sum(self.diag))


def truncation_range(spec: PacketSpec) -> tuple[int, int]:
    """Smallest symmetric level range keeping the Gaussian amplitude tail
    below spec.tail_tolerance.

    Returns (n_min, n_max) = (max(0, n0-k), n0+k) with the smallest k such
    that the amplitude weight g_n = exp(-(n-n0)^2/(2 sigma)) excluded from
    the range is less than tail_tolerance of the total over n >= 0.
    """
    n0, sigma, tol = spec.n0, spec.sigma, spec.tail_tolerance
    # upper bound on the half-width: Gaussian tail estimate plus slack
    k_cap = int(math.ceil(math.sqrt(2.0 * sigma * math.log(1.0 / tol)))) + 2
    n = np.arange(0, n0 + k_cap + 1)
    g = np.exp(-((n - n0) ** 2) / (2.0 * sigma))
    total = g.sum()
    for k in range(k_cap + 1):
        inside = g[max(0, n0 - k):n0 + k + 1].sum()
        if (total - inside) / total < tol:
            return max(0, n0 - k), n0 + k
    raise RuntimeError("truncation search did not converge")  # unreachable by k_cap


def build_weights(spec: PacketSpec) -> WeightTable:
    """Build the normalized overlap table for a packet.

    U_{m,n} is proportional to g_m * g_n over the truncated range and
    normalized so the total population sums to exactly 1; for two-band
    packets each band carries half, i.e. the stored per-band diagonal sums
    to 1/2.
    """
    n_min, n_max = truncation_range(spec)
    n = np.arange(n_min, n_max + 1)
    g = np.exp(-((n - spec.n0) ** 2) / (2.0 * spec.sigma))
    pop = g * g
    norm = pop.sum() * (2.0 if spec.bands == "both" else 1.0)
    diag = pop / norm
    offdiag = g[:-1] * g[1:] / norm
    diag.flags.writeable = False
    offdiag.flags.writeable = False
    return WeightTable(n_min=n_min, n_max=n_max, diag=diag, offdiag=offdiag,
                       band_content=spec.bands)


def weight_at(table: WeightTable, m: int, n: int) -> float:
    """Stored overlap U_{m,n}; zero outside the truncated range.

    Only the diagonal and first off-diagonal exist (observables never need
    more); |m - n| > 1 raises.
    """
    if abs(m - n) > 1:
        raise ValueError(f"only |m - n| <= 1 is stored, got ({m}, {n})")
    lo, hi = min(m, n), max(m, n)
    if lo < table.n_min or hi > table.n_max:
        return 0.0
    if m == n:
        return float(table.diag[n - table.n_min])
    return float(table.offdiag[hi - table.n_min - 1])
