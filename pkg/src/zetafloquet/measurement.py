"""Stroboscopic readout in the |i> basis, shot noise, and the S parameter.

Start in |0>, apply ``n`` fundamental periods, project on
``|i> = (|0> + i|1>) / sqrt 2``.  Frozen dynamics (quasienergy 0) pins every
population at 1/2, so ``S = sum_n (P(n) - 1/2)`` vanishes there.
"""
from __future__ import annotations

import logging
import math
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .csvio import read_csv, write_csv
from .errors import UsageError
from .floquet import FloquetSpectrum, PeriodPropagator, propagate_period, quasienergies
from .waveform import DrivingSpec, FourierWaveform, sine_coefficients

log = logging.getLogger(__name__)

DEFAULT_N = (5, 10, 15, 20, 25, 30)
SHOTS_LOW_E = 2000
SHOTS_HIGH_E = 5000
SHOT_SPLIT_E = 100.0


@dataclass(frozen=True)
class PopulationCurve:
    n_list: tuple
    P: tuple
    A: float
    spectrum: FloquetSpectrum
    spec: DrivingSpec | None = None

    def closed_form(self) -> np.ndarray:
        """Single-sinusoid approximation ``1/2 - A sin(2 n period epsilon)``."""
        phase = 2.0 * self.spectrum.period * self.spectrum.epsilon
        return 0.5 - self.A * np.sin(phase * np.asarray(self.n_list, dtype=float))


@dataclass(frozen=True)
class ScanRecord:
    E: float
    omega: float
    S: float
    deltaS: float
    shots: int
    seed: int
    P_hat: tuple
    n_list: tuple = DEFAULT_N
    epsilon: float = math.nan
    error: str | None = field(default=None, compare=False)


def _overlap_i(psi) -> float:
    # |<i|psi>|^2 with <i| = (<0| - i <1|) / sqrt 2, written as 1/2 + Im(psi0* psi1)
    # so that |0> and frozen states give exactly 1/2
    p = 0.5 + (psi[0].conjugate() * psi[1]).imag
    return float(min(1.0, max(0.0, p)))


def populations(source, n_list=DEFAULT_N) -> PopulationCurve:
    """Exact |i> populations after each ``n`` in ``n_list``.

    ``source`` is a :class:`FourierWaveform` (propagated here) or an already
    computed :class:`PeriodPropagator`.
    """
    n_list = tuple(int(n) for n in n_list)
    if not n_list or min(n_list) < 0:
        raise UsageError(f"n_list must be non-empty with entries >= 0, got {n_list}")
    if isinstance(source, FourierWaveform):
        prop = propagate_period(source)
        spec = source.spec
    elif isinstance(source, PeriodPropagator):
        prop, spec = source, source.spec
    else:
        raise TypeError(f"expected FourierWaveform or PeriodPropagator, got {type(source).__name__}")
    spectrum = quasienergies(prop)
    P = tuple(_overlap_i(spectrum.power(n)[:, 0]) for n in n_list)
    return PopulationCurve(n_list=n_list, P=P, A=spectrum.amplitude, spectrum=spectrum, spec=spec)


def _rng_for(seed: int, E: float, n: int) -> np.random.Generator:
    # Philox is counter-based: the stream depends only on the key, never on call order.
    e_bits = struct.unpack("<Q", struct.pack("<d", float(E)))[0]
    key = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, e_bits, int(n)])
    return np.random.Generator(np.random.Philox(key))


def sample_shots(curve: PopulationCurve, shots: int, seed: int, E: float | None = None):
    """Binomial estimates of each population and their 1-sigma errors."""
    if shots < 1:
        raise UsageError(f"shots must be >= 1, got {shots}")
    if E is None:
        E = curve.spec.E if curve.spec is not None else 0.0
    P_hat, sigma = [], []
    for n, p in zip(curve.n_list, curve.P):
        k = _rng_for(seed, E, n).binomial(shots, min(1.0, max(0.0, p)))
        ph = k / shots
        P_hat.append(ph)
        sigma.append(max(math.sqrt(ph * (1.0 - ph) / shots), 0.5 / shots))
    return P_hat, sigma


def s_parameter(P_hat, sigma):
    """``S = sum (P - 1/2)`` and ``deltaS = sum sigma`` (linear sum of 1-sigma errors)."""
    if len(P_hat) != len(sigma):
        raise UsageError(f"length mismatch: {len(P_hat)} populations, {len(sigma)} errors")
    S = math.fsum(p - 0.5 for p in P_hat)
    dS = math.fsum(sigma)
    return S, dS


def default_shots(E: float) -> int:
    return SHOTS_LOW_E if E <= SHOT_SPLIT_E else SHOTS_HIGH_E


def measure_point(E: float, omega: float, shots: int | None = 0, seed: int = 0,
                  n_list=DEFAULT_N, **spec_kwargs) -> ScanRecord:
    """Synthesize, propagate, read out and reduce a single grid point."""
    n_list = tuple(n_list)
    n_shots = default_shots(E) if shots is None else int(shots)
    try:
        w = sine_coefficients(DrivingSpec(E=E, omega=omega, **spec_kwargs))
        curve = populations(w, n_list)
        if n_shots > 0:
            P_hat, sigma = sample_shots(curve, n_shots, seed, E=E)
        else:
            P_hat, sigma = list(curve.P), [0.0] * len(n_list)
        S, dS = s_parameter(P_hat, sigma)
        return ScanRecord(E=E, omega=omega, S=S, deltaS=dS, shots=n_shots, seed=seed,
                          P_hat=tuple(P_hat), n_list=n_list, epsilon=curve.spectrum.epsilon)
    except Exception as exc:  # annotate, never abort the scan
        log.warning("scan point E=%r failed: %s", E, exc)
        nan = math.nan
        return ScanRecord(E=E, omega=omega, S=nan, deltaS=nan, shots=n_shots, seed=seed,
                          P_hat=(nan,) * len(n_list), n_list=n_list,
                          error=f"{type(exc).__name__}: {exc}")


def _measure_star(args):
    E, omega, shots, seed, n_list, spec_kwargs = args
    return measure_point(E, omega, shots, seed, n_list, **spec_kwargs)


def scan(omega: float, E_grid, shots: int | None = 0, seed: int = 0, n_list=DEFAULT_N,
         jobs: int = 1, progress=None, **spec_kwargs) -> list:
    """Measure every ``E`` in a strictly increasing grid; results follow grid order.

    ``shots=None`` uses 2000 shots for E <= 100 and 5000 above; ``0`` is noise-free.
    """
    grid = [float(e) for e in E_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise UsageError("E_grid must be strictly increasing")
    tasks = [(E, float(omega), shots, int(seed), tuple(n_list), spec_kwargs) for E in grid]
    out = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, rec in enumerate(pool.map(_measure_star, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))):
                out.append(rec)
                if progress:
                    progress(i + 1, len(tasks))
    else:
        for i, t in enumerate(tasks):
            out.append(_measure_star(t))
            if progress:
                progress(i + 1, len(tasks))
    return out


def scan_header(n_list=DEFAULT_N):
    return ["E", "omega", "S", "deltaS", "shots", "seed"] + [f"P{n}" for n in n_list]


def write_scan_csv(dest, records) -> None:
    n_list = records[0].n_list if records else DEFAULT_N
    rows = ([r.E, r.omega, r.S, r.deltaS, r.shots, r.seed, *r.P_hat] for r in records)
    write_csv(dest, scan_header(n_list), rows)


def read_scan_csv(src) -> list:
    header, rows = read_csv(src)
    if header[:6] != scan_header()[:6]:
        raise UsageError(f"not a scan table: header {header}")
    n_list = tuple(int(h[1:]) for h in header[6:])
    recs = []
    for r in rows:
        recs.append(ScanRecord(E=float(r[0]), omega=float(r[1]), S=float(r[2]), deltaS=float(r[3]),
                               shots=int(r[4]), seed=int(r[5]),
                               P_hat=tuple(float(x) for x in r[6:]), n_list=n_list))
    return recs
