"""Driving waveform built from van der Pol's function.

The primitive ``F(t) = arccos(g~(t) cos(E t))`` on ``[0, T]`` is expanded in
a sine series; its termwise derivative ``f(t)`` is an even cosine series whose
full period is ``2T``.  The truncated series *is* the drive: its ringing near
the discontinuities of ``g~`` is kept, not filtered.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss

from .csvio import read_csv, write_csv
from .errors import DomainError
from .zeta import vdp, vdp_breakpoints

# Gauss-Legendre nodes per panel; panels are added until the top harmonic
# has at most a few wavelengths per panel.
_PANEL_NODES = 32
_WAVES_PER_PANEL = 4


@dataclass(frozen=True)
class DrivingSpec:
    """One drive configuration; energies in units of J, times in 1/J."""

    E: float
    omega: float
    J: float = 1.0
    n_terms: int = 500
    quad_points: int = 512
    substeps: int = 8192

    def __post_init__(self):
        if not math.isfinite(self.E):
            raise DomainError(f"E must be finite, got {self.E!r}")
        if not self.omega > 0 or not math.isfinite(self.omega):
            raise DomainError(f"omega must be positive, got {self.omega!r}")
        if not self.J > 0:
            raise DomainError(f"J must be positive, got {self.J!r}")
        if self.n_terms < 1:
            raise DomainError(f"n_terms must be >= 1, got {self.n_terms}")
        if self.quad_points < 1:
            raise DomainError(f"quad_points must be >= 1, got {self.quad_points}")
        if self.substeps < 2 * self.n_terms:
            raise DomainError(
                f"substeps ({self.substeps}) must be >= 2 * n_terms ({2 * self.n_terms})"
            )

    @property
    def T(self) -> float:
        return 2.0 * math.pi / self.omega

    @property
    def period(self) -> float:
        """Fundamental period of the even, reflected drive."""
        return 2.0 * self.T


def primitive_F(t, E: float, T: float | None = None):
    """Pointwise ``arccos(g~(t) cos(E t))`` in ``[0, pi]``.

    With ``T`` given, ``t`` must lie in ``[0, T]``.
    """
    t_arr = np.asarray(t, dtype=float)
    lo = float(np.min(t_arr)) if t_arr.size else 0.0
    hi = float(np.max(t_arr)) if t_arr.size else 0.0
    if lo < 0.0 or (T is not None and hi > T):
        bound = "[0, T]" if T is not None else "t >= 0"
        raise DomainError(f"primitive_F is defined on {bound}; got t in [{lo}, {hi}]")
    arg = np.clip(vdp(t_arr) * np.cos(E * t_arr), -1.0, 1.0)
    out = np.arccos(arg)
    return float(out) if np.ndim(t) == 0 else out


def _quadrature_nodes(spec: DrivingSpec):
    """Composite Gauss-Legendre nodes/weights on ``[0, T]``, split at every ``ln m``."""
    T = spec.T
    edges = np.concatenate([[0.0], vdp_breakpoints(T), [T]])
    x, w = leggauss(_PANEL_NODES)
    # at least quad_points nodes per smooth piece, more if the top harmonic needs them
    min_panels = max(1, math.ceil(spec.quad_points / _PANEL_NODES))
    wavelength = 2.0 * T / spec.n_terms
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        if b <= a:
            continue
        n_pan = max(min_panels, math.ceil((b - a) / (_WAVES_PER_PANEL * wavelength)))
        cuts = np.linspace(a, b, n_pan + 1)
        half = 0.5 * np.diff(cuts)
        mid = 0.5 * (cuts[:-1] + cuts[1:])
        nodes.append((mid[:, None] + half[:, None] * x[None, :]).ravel())
        weights.append((half[:, None] * w[None, :]).ravel())
    return np.concatenate(nodes), np.concatenate(weights)


def _harmonic_numbers(n):
    return np.arange(1, n + 1, dtype=float)


@dataclass(frozen=True)
class FourierWaveform:
    """Sine coefficients ``b_k`` of F on ``[0, T]``; ``f`` has cosine coefficients ``b_k k pi / T``."""

    spec: DrivingSpec
    b: np.ndarray = field(repr=False)

    def __post_init__(self):
        b = np.array(self.b, dtype=float)
        if b.ndim != 1 or len(b) != self.spec.n_terms:
            raise DomainError(f"expected {self.spec.n_terms} coefficients, got shape {b.shape}")
        b.setflags(write=False)
        object.__setattr__(self, "b", b)

    @property
    def T(self) -> float:
        return self.spec.T

    @property
    def period(self) -> float:
        return self.spec.period

    @property
    def wavenumbers(self) -> np.ndarray:
        return _harmonic_numbers(len(self.b)) * (math.pi / self.T)

    @property
    def c(self) -> np.ndarray:
        """Cosine coefficients of ``f``."""
        return self.b * self.wavenumbers

    def F_series(self, t):
        """Odd, 2T-periodic sine series of the primitive."""
        return _trig_sum(np.sin, t, self.wavenumbers, self.b)

    def f(self, t):
        return driving_f(t, self)

    def F_uniform(self, t0: float, n: int) -> np.ndarray:
        """``F_series`` on ``t0 + j * period / n`` for ``j < n``, by FFT."""
        return _uniform_sum(self.b, t0, n, self.period, odd=True)

    def f_uniform(self, t0: float, n: int) -> np.ndarray:
        return _uniform_sum(self.c, t0, n, self.period, odd=False)

    @classmethod
    def from_coefficients(cls, spec: DrivingSpec, b) -> "FourierWaveform":
        return cls(spec=spec, b=np.asarray(b, dtype=float))

    @classmethod
    def static(cls, omega: float, J: float = 1.0, n_terms: int = 1, substeps: int = 8192):
        """``f = 0``: the undriven two-level system."""
        spec = DrivingSpec(E=0.0, omega=omega, J=J, n_terms=n_terms, substeps=substeps)
        return cls(spec=spec, b=np.zeros(n_terms))

    @classmethod
    def monochromatic(cls, amplitude: float, omega: float, J: float = 1.0, substeps: int = 8192):
        """``f(t) = amplitude * cos(omega t)``, i.e. harmonic 2 of the 2T-periodic series."""
        spec = DrivingSpec(E=0.0, omega=omega, J=J, n_terms=2, substeps=substeps)
        return cls(spec=spec, b=np.array([0.0, amplitude / omega]))


def _trig_sum(fn, t, kvec, coef, chunk=4096):
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty(t_arr.shape)
    flat_t, flat_o = t_arr.ravel(), out.reshape(-1)
    for lo in range(0, flat_t.size, chunk):
        sl = slice(lo, lo + chunk)
        flat_o[sl] = fn(np.outer(flat_t[sl], kvec)) @ coef
    return float(out.ravel()[0]) if np.ndim(t) == 0 else out


def _uniform_sum(coef, t0, n, period, odd):
    # sum_k coef_k trig(2 pi k (t0 + j period / n) / period), k = 1..K, via one inverse FFT
    K = len(coef)
    k = np.arange(1, K + 1)
    phased = coef * np.exp(2j * np.pi * k * t0 / period)
    if K >= n:
        # fold aliased harmonics onto the n-point grid
        spectrum = np.zeros(n, dtype=complex)
        np.add.at(spectrum, k % n, phased)
    else:
        spectrum = np.zeros(n, dtype=complex)
        spectrum[1 : K + 1] = phased
    z = np.fft.ifft(spectrum) * n
    return z.imag if odd else z.real


def sine_coefficients(spec: DrivingSpec) -> FourierWaveform:
    """``b_k = (2/T) int_0^T F(t) sin(k pi t / T) dt`` for ``k = 1..n_terms``."""
    t, w = _quadrature_nodes(spec)
    F = primitive_F(t, spec.E)
    kvec = _harmonic_numbers(spec.n_terms) * (math.pi / spec.T)
    b = np.empty(spec.n_terms)
    fw = F * w
    chunk = max(1, 2**21 // max(1, len(t)))
    for lo in range(0, spec.n_terms, chunk):
        sl = slice(lo, lo + chunk)
        b[sl] = np.sin(np.outer(kvec[sl], t)) @ fw
    b *= 2.0 / spec.T
    return FourierWaveform(spec=spec, b=b)


def synthesize(E: float, omega: float, **kwargs) -> FourierWaveform:
    return sine_coefficients(DrivingSpec(E=E, omega=omega, **kwargs))


def driving_f(t, w: FourierWaveform):
    """``f(t) = sum_k b_k (k pi / T) cos(k pi t / T)``."""
    return _trig_sum(np.cos, t, w.wavenumbers, w.c)


def export_waveform(w: FourierWaveform, n_samples: int):
    """Uniform samples ``(t, f)`` over one full period ``[0, 2T)``."""
    if n_samples < 2:
        raise DomainError(f"n_samples must be >= 2, got {n_samples}")
    t = np.arange(n_samples) * (w.period / n_samples)
    return t, driving_f(t, w)


def write_waveform_csv(dest, w: FourierWaveform, n_samples: int) -> None:
    t, f = export_waveform(w, n_samples)
    write_csv(dest, ["t", "f"], zip(t, f))


def read_waveform_csv(src):
    header, rows = read_csv(src)
    if header != ["t", "f"]:
        raise DomainError(f"not a waveform table: header {header}")
    data = np.array([[float(x) for x in r] for r in rows], dtype=float).reshape(-1, 2)
    return data[:, 0], data[:, 1]
