"""Locate S = 0 crossings and bootstrap their positions with cubic interpolation."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.stats import truncnorm

from .csvio import write_csv
from .errors import EstimationFailed, UsageError
from .zeta import known_zeros, zeta_critical

log = logging.getLogger(__name__)

RIEMANN = "riemann"
RE_ONLY = "re_only"
UNCLASSIFIED = "unclassified"

LAWS = ("uniform", "gaussian")
LOW_RETENTION = 0.5


@dataclass(frozen=True)
class Window:
    """Grid points around one sign change between ``E[bracket]`` and ``E[bracket + 1]``."""

    E: tuple
    S: tuple
    dS: tuple
    bracket: int
    index: int = 0

    @property
    def lo(self) -> float:
        return self.E[self.bracket]

    @property
    def hi(self) -> float:
        return self.E[self.bracket + 1]


@dataclass(frozen=True)
class ZeroEstimate:
    mean: float
    std: float
    n_boot: int
    n_retained: int
    window: Window
    kind: str = UNCLASSIFIED

    @property
    def retention(self) -> float:
        return self.n_retained / self.n_boot if self.n_boot else 1.0

    @property
    def low_retention(self) -> bool:
        return self.retention < LOW_RETENTION


def find_sign_changes(records) -> list:
    """One window per adjacent pair with ``S_i * S_(i+1) < 0``.

    The window holds the four grid points centred on the crossing, cut to
    three (or two) at the ends of the grid.
    """
    recs = list(records)
    if len(recs) < 2:
        raise UsageError(f"need at least 2 scan records, got {len(recs)}")
    E = [r.E for r in recs]
    if any(b <= a for a, b in zip(E, E[1:])):
        raise UsageError("scan records must be sorted by strictly increasing E")
    S = [r.S for r in recs]
    dS = [r.deltaS for r in recs]
    windows = []
    for i in range(len(recs) - 1):
        if not S[i] * S[i + 1] < 0:
            continue
        lo, hi = max(0, i - 1), min(len(recs), i + 3)
        windows.append(Window(E=tuple(E[lo:hi]), S=tuple(S[lo:hi]), dS=tuple(dS[lo:hi]),
                              bracket=i - lo, index=len(windows)))
    return windows


def _poly_real_roots(coef, lo, hi, mid):
    """Root of each row's polynomial (ascending coefficients) inside ``[lo, hi]``.

    Returns NaN where there is none; several roots -> the one nearest ``mid``.
    Leading coefficients that are negligible for the row are dropped first.
    """
    n_rows, n_coef = coef.shape
    out = np.full(n_rows, np.nan)
    scale = np.max(np.abs(coef), axis=1)
    scale = np.where(scale > 0, scale, 1.0)
    significant = np.abs(coef) > 1e-12 * scale[:, None]
    degree = np.where(significant.any(axis=1), n_coef - 1 - np.argmax(significant[:, ::-1], axis=1), 0)
    span = hi - lo
    tol = 1e-12 * max(1.0, span)

    def pick(rows, roots):
        # roots: (len(rows), d) complex
        real = np.abs(roots.imag) <= 1e-9 * np.maximum(1.0, np.abs(roots.real))
        inside = real & (roots.real >= lo - tol) & (roots.real <= hi + tol)
        dist = np.where(inside, np.abs(roots.real - mid), np.inf)
        best = np.argmin(dist, axis=1)
        ok = np.isfinite(dist[np.arange(len(rows)), best])
        vals = np.clip(roots.real[np.arange(len(rows)), best], lo, hi)
        out[rows[ok]] = vals[ok]

    for d in range(1, n_coef):
        rows = np.nonzero(degree == d)[0]
        if rows.size == 0:
            continue
        c = coef[rows, : d + 1]
        if d == 1:
            roots = (-c[:, 0] / c[:, 1]).astype(complex)[:, None]
        else:
            # companion matrices, batched
            comp = np.zeros((rows.size, d, d))
            comp[:, 1:, :-1] = np.eye(d - 1)
            comp[:, :, -1] = -c[:, :d] / c[:, d : d + 1]
            roots = np.linalg.eigvals(comp)
        pick(rows, roots)
    return out


def _interpolate_roots(E, S_draws, bracket):
    """Interpolating polynomial through each row of ``S_draws``; root in the bracket."""
    E = np.asarray(E, dtype=float)
    lo, hi = E[bracket], E[bracket + 1]
    centre, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    x = (E - centre) / half
    V = np.vander(x, len(x), increasing=True)
    coef = np.linalg.solve(V, S_draws.T).T
    roots = _poly_real_roots(coef, -1.0, 1.0, 0.0)
    return centre + half * roots


def bootstrap_zero(window: Window, n_boot: int = 4000, seed: int = 0, law: str = "uniform") -> ZeroEstimate:
    """Mean and spread of the in-bracket root over ``n_boot`` perturbed interpolations.

    Each draw moves every ``S`` uniformly inside ``[S - dS, S + dS]``
    (``law='gaussian'``: normal with sigma ``dS`` conditioned on that interval).
    Draws without a root in the bracket are discarded and counted.
    """
    if len(window.E) < 2:
        raise UsageError("window needs at least 2 points")
    if law not in LAWS:
        raise UsageError(f"law must be one of {LAWS}, got {law!r}")
    S = np.asarray(window.S, dtype=float)
    dS = np.asarray(window.dS, dtype=float)
    if np.all(dS == 0):
        root = _interpolate_roots(window.E, S[None, :], window.bracket)[0]
        if not np.isfinite(root):
            raise EstimationFailed("interpolant has no root inside the bracket",
                                   {"window": window, "n_boot": n_boot, "n_retained": 0})
        return ZeroEstimate(mean=float(root), std=0.0, n_boot=n_boot, n_retained=n_boot, window=window)
    key = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, int(window.index)])
    rng = np.random.Generator(np.random.Philox(key))
    if law == "uniform":
        u = rng.uniform(-1.0, 1.0, size=(n_boot, len(S)))
    else:
        u = truncnorm.rvs(-1.0, 1.0, size=(n_boot, len(S)), random_state=rng)
    draws = S[None, :] + u * dS[None, :]
    roots = _interpolate_roots(window.E, draws, window.bracket)
    kept = roots[np.isfinite(roots)]
    if kept.size == 0:
        raise EstimationFailed(
            f"no draw produced a root in [{window.lo}, {window.hi}]",
            {"window": window, "n_boot": n_boot, "n_retained": 0},
        )
    est = ZeroEstimate(mean=float(np.mean(kept)), std=float(np.std(kept)), n_boot=n_boot,
                       n_retained=int(kept.size), window=window)
    if est.low_retention:
        log.warning("window %d at E~%.3f kept only %d/%d draws", window.index, est.mean, kept.size, n_boot)
    return est


def classify(est: ZeroEstimate, threshold: float = 0.1, radius: float = 0.5, step: float = 0.01) -> ZeroEstimate:
    """``riemann`` if ``|zeta(1/2 + iE)|`` dips below ``threshold`` within ``radius`` of the estimate."""
    if math.isinf(threshold) and threshold > 0:
        return replace(est, kind=RIEMANN)
    n = int(round(2 * radius / step))
    grid = est.mean - radius + step * np.arange(n + 1)
    zmin = float(np.min(np.abs(zeta_critical(grid))))
    return replace(est, kind=RIEMANN if zmin < threshold else RE_ONLY)


def extract_zeros(records, n_boot: int = 4000, seed: int = 0, threshold: float = 0.1,
                  law: str = "uniform") -> list:
    """Sign changes -> bootstrap -> classification; failed windows are logged and skipped."""
    out = []
    for win in find_sign_changes(records):
        try:
            est = bootstrap_zero(win, n_boot=n_boot, seed=seed, law=law)
        except EstimationFailed as exc:
            log.warning("window %d skipped: %s", win.index, exc)
            continue
        out.append(classify(est, threshold))
    return out


def match_catalogue(E: float, radius: float = 0.5):
    """Nearest catalogue height within ``radius`` (or ``None``)."""
    zs = known_zeros().as_array()
    i = int(np.argmin(np.abs(zs - E)))
    return float(zs[i]) if abs(zs[i] - E) <= radius else None


ZERO_HEADER = ["index", "kind", "E_mean", "E_std", "n_retained", "exact_E", "abs_error"]


def zero_rows(estimates):
    for i, est in enumerate(estimates, start=1):
        exact = match_catalogue(est.mean)
        err = abs(est.mean - exact) if exact is not None else None
        yield [i, est.kind, est.mean, est.std, est.n_retained, exact, err]


def write_zero_csv(dest, estimates) -> None:
    write_csv(dest, ZERO_HEADER, zero_rows(estimates))
