"""One-period propagator, quasienergies and first-order effective tunneling.

The Hamiltonian is ``H(t) = J sigma_x + (f(t) / 2) sigma_z`` over the
fundamental period ``2T`` of the reflected drive.  Two integrators share the
same closed-form SU(2) step exponential:

``magnus4`` (default)
    Rotating frame of the drive: ``H_I = J (cos F sigma_x - sin F sigma_y)``
    with the series primitive ``F``, advanced by the two-point fourth-order
    Magnus step.  ``H_I`` is bounded by J however sharp the drive spikes are.
``midpoint``
    Lab frame, ``f`` sampled at step midpoints, piecewise constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .errors import InvariantViolation
from .waveform import DrivingSpec, FourierWaveform

METHODS = ("magnus4", "midpoint")

_SQRT3 = math.sqrt(3.0)
_GAUSS_OFFSETS = (0.5 - _SQRT3 / 6.0, 0.5 + _SQRT3 / 6.0)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class PeriodPropagator:
    U: np.ndarray = field(repr=False)
    period: float
    spec: DrivingSpec | None = None

    def __post_init__(self):
        U = np.array(self.U, dtype=complex)
        if U.shape != (2, 2):
            raise InvariantViolation(f"propagator must be 2x2, got {U.shape}")
        U.setflags(write=False)
        object.__setattr__(self, "U", U)

    def unitarity_error(self) -> float:
        return float(np.max(np.abs(self.U.conj().T @ self.U - np.eye(2))))

    def det_error(self) -> float:
        return float(abs(np.linalg.det(self.U) - 1.0))

    def check(self, tol: float = 1e-10) -> "PeriodPropagator":
        u, d = self.unitarity_error(), self.det_error()
        if u > tol or d > tol:
            raise InvariantViolation(
                f"propagator is not in SU(2): |U^dag U - I| = {u:.3g}, |det U - 1| = {d:.3g}"
            )
        return self

    @classmethod
    def identity(cls, period: float = 1.0) -> "PeriodPropagator":
        return cls(U=np.eye(2, dtype=complex), period=period)


@dataclass(frozen=True)
class FloquetSpectrum:
    """Quasienergy ``epsilon`` in ``[0, pi / period]`` and the mode ``(a, b)``.

    ``|Phi_1> = a|0> + b|1>`` has eigenvalue ``exp(-i period epsilon)``;
    ``|Phi_2> = b*|0> - a*|1>`` has the conjugate.  ``a`` is real and >= 0.
    """

    epsilon: float
    a: complex
    b: complex
    period: float

    @property
    def eigenphases(self) -> tuple:
        ph = self.period * self.epsilon
        return complex(math.cos(ph), -math.sin(ph)), complex(math.cos(ph), math.sin(ph))

    @property
    def modes(self) -> np.ndarray:
        """Columns are ``Phi_1`` and ``Phi_2``."""
        a, b = self.a, self.b
        return np.array([[a, b.conjugate()], [b, -a.conjugate()]], dtype=complex)

    @property
    def amplitude(self) -> float:
        """``Re{a b*}``, the oscillation amplitude of the |i> population."""
        return float((self.a * self.b.conjugate()).real)

    def power(self, n: int) -> np.ndarray:
        """``U**n`` rebuilt from the spectral decomposition."""
        V = self.modes
        ph = self.period * self.epsilon * n
        d = np.array([complex(math.cos(ph), -math.sin(ph)), complex(math.cos(ph), math.sin(ph))])
        return (V * d[None, :]) @ V.conj().T


@dataclass(frozen=True)
class EffectiveTunneling:
    value: complex
    spec: DrivingSpec | None = None


def _rotating_frame_fields(w: FourierWaveform, t0: float, n_steps: int, h: float):
    J = w.spec.J
    if np.all(w.b == 0.0):
        F1 = F2 = np.zeros(n_steps)
    else:
        n_grid = round(w.period / h)
        if n_grid * h == w.period or abs(n_grid * h - w.period) < 1e-12 * w.period:
            # steps lie on a uniform grid commensurate with the period: use FFTs
            F1 = w.F_uniform(t0 + _GAUSS_OFFSETS[0] * h, n_grid)
            F2 = w.F_uniform(t0 + _GAUSS_OFFSETS[1] * h, n_grid)
            if n_steps != n_grid:
                idx = np.arange(n_steps) % n_grid
                F1, F2 = F1[idx], F2[idx]
        else:
            t = t0 + h * np.arange(n_steps)
            F1 = w.F_series(t + _GAUSS_OFFSETS[0] * h)
            F2 = w.F_series(t + _GAUSS_OFFSETS[1] * h)
    # fourth-order Magnus: h [ (H1 + H2) / 2 + (sqrt3 h / 6) (v2 x v1) . sigma ]
    gx = 0.5 * J * (np.cos(F1) + np.cos(F2))
    gy = -0.5 * J * (np.sin(F1) + np.sin(F2))
    gz = (_SQRT3 * h / 6.0) * J * J * np.sin(F2 - F1)
    return gx, gy, gz, F1, F2


def _z_rotation(phi: float) -> np.ndarray:
    return np.diag([complex(math.cos(phi / 2), -math.sin(phi / 2)),
                    complex(math.cos(phi / 2), math.sin(phi / 2))])


def propagate_interval(w: FourierWaveform, t0: float, t1: float, substeps: int | None = None,
                       method: str = "magnus4", backend: str | None = None) -> np.ndarray:
    """Time-ordered ``U(t1, t0)`` with ``substeps`` equal steps."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    n = substeps or w.spec.substeps
    h = (t1 - t0) / n
    product = _backend.ordered_product_for(backend)
    J = w.spec.J
    if method == "midpoint":
        if abs(t1 - t0 - w.period) < 1e-12 * w.period:
            f = w.f_uniform(t0 + 0.5 * h, n)
        else:
            f = w.f(t0 + h * (np.arange(n) + 0.5))
        return product(np.full(n, J), np.zeros(n), 0.5 * f, h)
    gx, gy, gz, _, _ = _rotating_frame_fields(w, t0, n, h)
    U_I = product(gx, gy, gz, h)
    F_end = float(w.F_series(t1)) if np.any(w.b) else 0.0
    F_start = float(w.F_series(t0)) if np.any(w.b) else 0.0
    if F_end == 0.0 and F_start == 0.0:
        return U_I
    return _z_rotation(F_end) @ U_I @ _z_rotation(-F_start)


def propagate_period(w: FourierWaveform, substeps: int | None = None,
                     method: str = "magnus4", backend: str | None = None) -> PeriodPropagator:
    """One-period operator over ``[0, 2T]``.

    ``F`` vanishes at both ends (odd and 2T-periodic), so the rotating and
    lab frames coincide there and no frame correction is needed.
    """
    n = substeps or w.spec.substeps
    h = w.period / n
    product = _backend.ordered_product_for(backend)
    if method == "midpoint":
        f = w.f_uniform(0.5 * h, n)
        U = product(np.full(n, w.spec.J), np.zeros(n), 0.5 * f, h)
    elif method == "magnus4":
        gx, gy, gz, _, _ = _rotating_frame_fields(w, 0.0, n, h)
        U = product(gx, gy, gz, h)
    else:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    return PeriodPropagator(U=U, period=w.period, spec=w.spec)


def quasienergies(p: PeriodPropagator, tol: float = 1e-8) -> FloquetSpectrum:
    """Eigen-decompose an SU(2) propagator ``U = cos(phi) I - i sin(phi) n . sigma``."""
    U = p.U
    u_err = float(np.max(np.abs(U.conj().T @ U - np.eye(2))))
    if not np.all(np.isfinite(U)) or u_err > tol:
        raise InvariantViolation(f"cannot eigen-decompose a non-unitary propagator (error {u_err:.3g})")
    cos_phi = 0.5 * (U[0, 0].real + U[1, 1].real)
    sx = -0.5 * (U[0, 1].imag + U[1, 0].imag)
    sy = 0.5 * (U[1, 0].real - U[0, 1].real)
    sz = 0.5 * (U[1, 1].imag - U[0, 0].imag)
    sin_phi = math.sqrt(sx * sx + sy * sy + sz * sz)
    phi = math.atan2(sin_phi, cos_phi)
    if sin_phi == 0.0:
        a, b = 1.0 + 0j, 0j
    else:
        nx, ny, nz = sx / sin_phi, sy / sin_phi, sz / sin_phi
        # +1 eigenvector of n . sigma, built from the better-conditioned column
        if nz >= 0.0:
            a, b = complex(1.0 + nz), complex(nx, ny)
        else:
            a, b = complex(nx, -ny), complex(1.0 - nz)
            phase = abs(a) / a if a != 0 else 1.0
            a, b = a * phase, b * phase
        norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        a, b = complex(abs(a) / norm), b / norm
    return FloquetSpectrum(epsilon=phi / p.period, a=a, b=b, period=p.period)


def effective_tunneling(w: FourierWaveform, tol: float = 1e-8) -> EffectiveTunneling:
    """``J_eff = (J / 2T) int_0^2T exp(-i F(t)) dt`` for the series primitive.

    The integrand is smooth and periodic, so the trapezoid rule converges
    geometrically; the grid is doubled until successive values agree to ``tol``.
    """
    J = w.spec.J
    if not np.any(w.b):
        return EffectiveTunneling(value=complex(J), spec=w.spec)
    n = max(256, 1 << int(math.ceil(math.log2(8 * len(w.b)))))
    prev = None
    while True:
        F = w.F_uniform(0.0, n)
        val = J * complex(np.mean(np.exp(-1j * F)))
        if prev is not None and abs(val - prev) < tol:
            return EffectiveTunneling(value=val, spec=w.spec)
        if n > 1 << 24:
            raise InvariantViolation(f"J_eff quadrature did not converge (last change {abs(val - prev):.3g})")
        prev = val
        n *= 2


def high_frequency_check(w: FourierWaveform, substeps: int | None = None) -> float:
    """``| epsilon - |J_eff| |`` with the exact quasienergy folded into ``[0, pi/period]``."""
    eps = quasienergies(propagate_period(w, substeps=substeps)).epsilon
    j_eff = abs(effective_tunneling(w).value)
    zone = math.pi / w.period
    # fold |J_eff| into the same zone as epsilon
    j_folded = j_eff % (2.0 * zone)
    if j_folded > zone:
        j_folded = 2.0 * zone - j_folded
    return abs(eps - j_folded)
