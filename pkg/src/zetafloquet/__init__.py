"""Simulated Floquet qubit whose quasienergy vanishes at the Riemann zeros."""
__version__ = "0.1.0"

from ._backend import BACKEND
from .errors import DomainError, EstimationFailed, InvariantViolation, UsageError
from .floquet import (EffectiveTunneling, FloquetSpectrum, PeriodPropagator, effective_tunneling,
                      high_frequency_check, propagate_period, quasienergies)
from .measurement import PopulationCurve, ScanRecord, measure_point, populations, s_parameter, scan
from .primes import detect_peaks, h_function, prime_pi, riemann_J, staircase
from .waveform import DrivingSpec, FourierWaveform, export_waveform, primitive_F, sine_coefficients, synthesize
from .zeros import ZeroEstimate, bootstrap_zero, classify, extract_zeros, find_sign_changes
from .zeta import (CriticalPoint, ZeroCatalogue, g_value, known_zeros, re_g_via_vdp, vdp,
                   zeta_critical)

__all__ = [
    "BACKEND", "CriticalPoint", "DomainError", "DrivingSpec", "EffectiveTunneling", "EstimationFailed",
    "FloquetSpectrum", "FourierWaveform", "InvariantViolation", "PeriodPropagator", "PopulationCurve",
    "ScanRecord", "UsageError", "ZeroCatalogue", "ZeroEstimate", "bootstrap_zero", "classify",
    "detect_peaks", "effective_tunneling", "export_waveform", "extract_zeros", "find_sign_changes",
    "g_value", "h_function", "high_frequency_check", "known_zeros", "measure_point", "populations",
    "prime_pi", "primitive_F", "propagate_period", "quasienergies", "re_g_via_vdp", "riemann_J",
    "s_parameter", "scan", "sine_coefficients", "staircase", "synthesize", "vdp", "zeta_critical",
]
