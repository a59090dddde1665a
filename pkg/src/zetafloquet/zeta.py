"""Zeta function on the critical line and van der Pol's Fourier pair.

``g(E) = -zeta(1/2 + iE) / (1/2 + iE)`` has the Fourier transform

    g~(t) = exp(t/2) - exp(-t/2) * floor(exp(t))     (t >= 0)
    g~(t) = exp(t/2)                                  (t < 0)

and the real part of ``g`` can be rebuilt from the positive-time half of
``g~`` plus the closed-form contribution ``2 / (4E^2 + 1)`` of the negative
half.  Both routes are implemented here so they can check each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .errors import DomainError
from .tables import EXACT_ZEROS

E_MAX = 500.0

# Piecewise-exact segments of the van der Pol integral; the remainder of the
# window uses the mean value of the fractional part (error ~ K**-1.5 / 12).
_VDP_EXACT_PIECES = 2**17

_LOG_BORWEIN_RATE = math.log(3.0 + math.sqrt(8.0))


@dataclass(frozen=True)
class CriticalPoint:
    E: float
    s: complex
    zeta: complex
    g: complex

    @classmethod
    def at(cls, E: float) -> "CriticalPoint":
        z = complex(zeta_critical(E))
        s = complex(0.5, E)
        return cls(E=float(E), s=s, zeta=z, g=-z / s)


@dataclass(frozen=True)
class VdpSample:
    t: float
    value: float


@dataclass(frozen=True)
class ZeroCatalogue:
    """Ordered heights ``E_n`` of the first non-trivial zeros (3 decimals)."""

    heights: tuple

    def __len__(self):
        return len(self.heights)

    def __iter__(self):
        return iter(self.heights)

    def __getitem__(self, i):
        return self.heights[i]

    def zero(self, n: int) -> float:
        """1-based access, ``zero(1) == 14.135``."""
        if not 1 <= n <= len(self.heights):
            raise DomainError(f"zero index must be in 1..{len(self.heights)}, got {n}")
        return self.heights[n - 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.heights, dtype=float)


def known_zeros() -> ZeroCatalogue:
    return ZeroCatalogue(tuple(EXACT_ZEROS))


def _terms_needed(e_abs: float) -> int:
    # Borwein bound: 3 (1 + 2|t|) exp(pi |t| / 2) / ((3 + sqrt 8)^n |1 - 2^(1-s)|),
    # with |1 - 2^(1-s)| >= sqrt(2) - 1 on the critical line.
    log_bound = (
        math.log(3.0) + math.log1p(2.0 * e_abs) + 0.5 * math.pi * e_abs
        - math.log(math.sqrt(2.0) - 1.0) + 40.0
    )
    return max(20, int(math.ceil(log_bound / _LOG_BORWEIN_RATE)))


@lru_cache(maxsize=64)
def _eta_weights(n: int) -> np.ndarray:
    """Weights ``(d_n - d_k) / d_n`` of the accelerated alternating series."""
    i = np.arange(n + 1, dtype=float)
    log_terms = (
        math.log(n) + gammaln(n + i) + i * math.log(4.0)
        - gammaln(n - i + 1.0) - gammaln(2.0 * i + 1.0)
    )
    log_terms -= log_terms.max()
    partial = np.cumsum(np.exp(log_terms))
    w = 1.0 - partial[:-1] / partial[-1]
    w.setflags(write=False)
    return w


def _check_range(E):
    e_abs = np.max(np.abs(E)) if np.ndim(E) else abs(E)
    if not np.isfinite(e_abs) or e_abs > E_MAX:
        raise DomainError(f"|E| must be <= {E_MAX:g} for the eta-series oracle, got {e_abs!r}")
    return float(e_abs)


def zeta_critical(E):
    """``zeta(1/2 + iE)`` via the Borwein-accelerated Dirichlet eta series.

    Accepts a scalar or an array of heights; absolute error is below 1e-10
    for ``|E| <= 500``.
    """
    e_abs = _check_range(E)
    n = _terms_needed(e_abs)
    w = _eta_weights(n)
    k = np.arange(n, dtype=float)
    signed = np.where(k % 2 == 0, w, -w)
    log_k = np.log(k + 1.0)

    E_arr = np.atleast_1d(np.asarray(E, dtype=float))
    s = 0.5 + 1j * E_arr
    # Rows are heights; chunk to bound memory for long grids.
    out = np.empty(E_arr.shape, dtype=complex)
    step = max(1, 2**20 // n)
    for lo in range(0, E_arr.size, step):
        sl = slice(lo, lo + step)
        eta = np.exp(-np.outer(s[sl], log_k)) @ signed
        out[sl] = eta / (1.0 - 2.0 ** (1.0 - s[sl]))
    if np.ndim(E) == 0:
        return complex(out[0])
    return out


def g_value(E):
    """``-zeta(s) / s`` at ``s = 1/2 + iE``."""
    z = zeta_critical(E)
    return -z / (0.5 + 1j * np.asarray(E, dtype=float)) if np.ndim(E) else -z / complex(0.5, E)


def vdp(t):
    """Van der Pol's transform ``g~(t)``; the floor is right-continuous at ``t = ln k``.

    Evaluated as ``e^{-t/2} frac(e^t)``, which keeps the result in
    ``[0, e^{-t/2})`` where the two-term difference would cancel.  The
    floor index is pinned so that it steps exactly at the float ``log(k)``.
    """
    t_arr = np.asarray(t, dtype=float)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        et = np.exp(t_arr)
        k = np.floor(et)
        k = np.where(np.log(k + 1.0) <= t_arr, k + 1.0, k)
        k = np.where((k >= 2.0) & (np.log(k) > t_arr), k - 1.0, k)
        pos = np.exp(-0.5 * t_arr) * np.clip(et - k, 0.0, 1.0)
    # exp(t) loses integer resolution past ~2**53; use the mean fractional part there.
    big = t_arr > 36.0
    if np.any(big):
        pos = np.where(big, np.exp(-0.5 * t_arr) * 0.5, pos)
    out = np.where(t_arr < 0.0, np.exp(0.5 * np.minimum(t_arr, 0.0)), pos)
    return float(out) if np.ndim(t) == 0 else out


def vdp_sample(t: float) -> VdpSample:
    return VdpSample(t=float(t), value=vdp(t))


def vdp_breakpoints(t_max: float) -> np.ndarray:
    """Discontinuities ``ln k`` (k >= 2) of ``g~`` inside ``(0, t_max)``."""
    if t_max <= math.log(2.0):
        return np.empty(0)
    k_hi = int(math.floor(math.exp(min(t_max, 50.0))))
    ks = np.arange(2, k_hi + 1, dtype=float)
    pts = np.log(ks)
    return pts[pts < t_max]


def re_g_via_vdp(E: float, t_max: float, keep_constant: bool = True) -> float:
    """Rebuild ``Re g(E)`` from ``2/(4E^2+1) + int_0^t_max g~(t) cos(Et) dt``.

    On each segment ``[ln k, ln(k+1))`` the integrand is a sum of two complex
    exponentials, so every segment is integrated exactly.  Past the first
    ``2**17`` segments the fractional part of ``e^t`` is replaced by its mean.
    Set ``keep_constant=False`` to drop the ``2/(4E^2+1)`` term.
    """
    if not t_max > 0:
        raise DomainError(f"t_max must be positive, got {t_max!r}")
    s = complex(0.5, E)
    k_top = min(math.floor(math.exp(min(t_max, 50.0))), _VDP_EXACT_PIECES)
    k = np.arange(1, k_top + 1, dtype=float)
    a = np.log(k)
    b = np.minimum(np.log(k + 1.0), t_max)
    pieces = (np.exp(s * b) - np.exp(s * a)) / s - k * (
        np.exp((s - 1.0) * b) - np.exp((s - 1.0) * a)
    ) / (s - 1.0)
    total = pieces.sum()
    t_exact = math.log(k_top + 1.0)
    if t_max > t_exact:
        total += 0.5 * (np.exp((s - 1.0) * t_max) - np.exp((s - 1.0) * t_exact)) / (s - 1.0)
    result = total.real
    if keep_constant:
        result += 2.0 / (4.0 * E * E + 1.0)
    return float(result)
