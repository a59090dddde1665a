"""Primes back from zeros: the truncated explicit-formula sum and Riemann's staircase."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import find_peaks

from .csvio import write_csv
from .errors import DomainError, UsageError

PI_MAX = 10**8
# fraction of max|h|; 0.5 loses the weaker peaks at 2, 4, 8 and 16
DEFAULT_PROMINENCE = 0.4

_sieve = np.zeros(0, dtype=bool)
_cumulative = np.zeros(0, dtype=np.int64)


@dataclass(frozen=True)
class PrimePeak:
    x_peak: float
    height: float
    nearest_target: float
    offset: float


@dataclass(frozen=True)
class Staircase:
    x: np.ndarray
    J: np.ndarray


def h_function(x, zeros):
    """``-sum_rho x^rho`` over the given zeros, each paired with its conjugate.

    For ``rho = 1/2 + iE`` the pair contributes ``2 sqrt(x) cos(E ln x)``.
    """
    E = np.asarray(zeros, dtype=float).ravel()
    if E.size == 0:
        raise UsageError("need at least one zero")
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr <= 1.0):
        raise DomainError("h(x) is only evaluated for x > 1")
    flat = np.atleast_1d(x_arr).ravel()
    logs = np.log(flat)
    out = np.empty(flat.shape)
    chunk = max(1, 2**20 // E.size)
    for lo in range(0, flat.size, chunk):
        sl = slice(lo, lo + chunk)
        out[sl] = -2.0 * np.sqrt(flat[sl]) * (np.cos(np.outer(logs[sl], E)).sum(axis=1))
    return float(out[0]) if x_arr.ndim == 0 else out.reshape(x_arr.shape)


def _ensure_sieve(n: int) -> None:
    global _sieve, _cumulative
    if n < len(_sieve):
        return
    size = max(n + 1, 2 * len(_sieve), 1024)
    s = np.ones(size, dtype=bool)
    s[:2] = False
    for p in range(2, math.isqrt(size - 1) + 1):
        if s[p]:
            s[p * p :: p] = False
    _sieve = s
    _cumulative = np.cumsum(s, dtype=np.int64)


def prime_pi(x: float) -> int:
    """Number of primes ``<= x``."""
    if x > PI_MAX:
        raise DomainError(f"prime_pi is limited to x <= {PI_MAX:.0e}, got {x!r}")
    if x < 2:
        return 0
    n = int(math.floor(x))
    _ensure_sieve(n)
    return int(_cumulative[n])


def primes_upto(n: int) -> np.ndarray:
    _ensure_sieve(int(n))
    return np.nonzero(_sieve[: int(n) + 1])[0]


def _integer_root(x: float, n: int) -> float:
    # x ** (1/n) with the floor corrected at exact powers (8 ** (1/3) -> 2, not 1.9999...)
    r = x ** (1.0 / n)
    k = round(r)
    if k >= 1 and abs(r - k) < 1e-9 and k**n <= x:
        return float(k)
    return r


def riemann_J(x: float) -> float:
    """``sum_(n >= 1) pi(x^(1/n)) / n``; the sum stops once ``x^(1/n) < 2``."""
    if x < 1:
        raise DomainError(f"riemann_J needs x >= 1, got {x!r}")
    total = 0.0
    n = 1
    while True:
        r = _integer_root(x, n)
        if r < 2.0:
            break
        total += prime_pi(r) / n
        n += 1
    return total


def staircase(x_grid) -> Staircase:
    x = np.asarray(x_grid, dtype=float)
    return Staircase(x=x, J=np.array([riemann_J(v) if v >= 1 else 0.0 for v in x]))


def prime_power_targets(x_max: float) -> np.ndarray:
    """All ``p**k <= x_max``, sorted."""
    out = []
    for p in primes_upto(int(math.floor(x_max))):
        q = int(p)
        while q <= x_max:
            out.append(q)
            q *= int(p)
    return np.array(sorted(out), dtype=float)


def detect_peaks(x_grid, h_values, min_prominence: float | None = None) -> list:
    """Interior local maxima of ``h`` with at least ``min_prominence``.

    Default prominence is ``0.4 * max |h|`` on the grid.  Each peak is
    paired with the nearest prime or prime power up to ``max(x_grid)``.
    """
    x = np.asarray(x_grid, dtype=float)
    h = np.asarray(h_values, dtype=float)
    if len(x) < 3 or len(x) != len(h):
        raise UsageError("need a grid of >= 3 points matching the values")
    if min_prominence is None:
        min_prominence = DEFAULT_PROMINENCE * float(np.max(np.abs(h)))
    if min_prominence <= 0:
        return []
    idx, _ = find_peaks(h, prominence=min_prominence)
    targets = prime_power_targets(x.max())
    peaks = []
    for i in idx:
        xp = float(x[i])
        if targets.size:
            tgt = float(targets[np.argmin(np.abs(targets - xp))])
        else:
            tgt = math.nan
        peaks.append(PrimePeak(x_peak=xp, height=float(h[i]), nearest_target=tgt, offset=xp - tgt))
    return peaks


def default_grid(x_min: float = 1.5, x_max: float = 20.0, step: float = 0.001) -> np.ndarray:
    n = int(round((x_max - x_min) / step))
    return x_min + step * np.arange(n + 1)


def write_samples_csv(dest, x, h, J) -> None:
    write_csv(dest, ["x", "h", "J"], zip(x, h, J))


def write_peaks_csv(dest, peaks) -> None:
    write_csv(dest, ["x_peak", "height", "nearest_target", "offset"],
              ([p.x_peak, p.height, p.nearest_target, p.offset] for p in peaks))
