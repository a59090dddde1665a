import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from zetafloquet.errors import DomainError
from zetafloquet.waveform import (DrivingSpec, FourierWaveform, driving_f, export_waveform,
                                  primitive_F, read_waveform_csv, sine_coefficients, synthesize,
                                  write_waveform_csv)
from zetafloquet.zeta import g_value, vdp_breakpoints


@pytest.fixture(scope="module")
def w_e1():
    return synthesize(1.0, 5.0)


def _smooth_grid(T, n=1000, guard=0.05):
    t = np.linspace(0.0, T, n)
    bad = np.concatenate([[0.0, T], vdp_breakpoints(T)])
    keep = np.all(np.abs(t[:, None] - bad[None, :]) > guard, axis=1)
    return t[keep]


def test_spec_derived_quantities():
    s = DrivingSpec(E=10.0, omega=5.0)
    assert s.T == pytest.approx(2 * math.pi / 5)
    assert s.period == pytest.approx(2 * s.T)
    assert (s.n_terms, s.quad_points, s.substeps, s.J) == (500, 512, 8192, 1.0)


@pytest.mark.parametrize("kwargs", [
    {"omega": 0.0}, {"omega": -1.0}, {"J": 0.0}, {"n_terms": 0},
    {"quad_points": 0}, {"n_terms": 500, "substeps": 999}, {"E": math.nan},
])
def test_spec_validation(kwargs):
    base = {"E": 10.0, "omega": 5.0}
    base.update(kwargs)
    with pytest.raises(DomainError):
        DrivingSpec(**base)


def test_primitive_examples():
    assert primitive_F(0.0, 3.0) == pytest.approx(math.pi / 2)
    assert primitive_F(math.log(2.0), 0.0) == pytest.approx(math.pi / 2)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.0, 6.0), st.floats(-200.0, 200.0))
def test_primitive_range(t, E):
    F = primitive_F(t, E)
    assert 0.0 <= F <= math.pi


def test_primitive_domain():
    with pytest.raises(DomainError):
        primitive_F(-0.1, 1.0)
    with pytest.raises(DomainError):
        primitive_F(2.0, 1.0, T=1.0)


def test_coefficient_count(w_e1):
    assert w_e1.b.shape == (500,)
    assert not w_e1.b.flags.writeable


def test_coefficients_against_adaptive_quadrature():
    # independent oracle: scipy.quad over each smooth piece
    spec = DrivingSpec(E=23.0, omega=4.0, n_terms=40, substeps=80)
    w = sine_coefficients(spec)
    T = spec.T
    edges = np.concatenate([[0.0], vdp_breakpoints(T), [T]])
    for k in (1, 2, 7, 40):
        val = sum(quad(lambda t: primitive_F(t, spec.E) * math.sin(k * math.pi * t / T), a, b,
                       epsabs=1e-13, limit=200)[0] for a, b in zip(edges, edges[1:]))
        assert w.b[k - 1] == pytest.approx(2 / T * val, abs=1e-11)


def test_coefficients_deterministic():
    a = synthesize(31.0, 8.0).b
    b = synthesize(31.0, 8.0).b
    assert np.array_equal(a, b)


def test_series_vanishes_at_origin(w_e1):
    assert w_e1.F_series(0.0) == 0.0


def test_series_converges_at_smooth_points(w_e1):
    t = _smooth_grid(w_e1.T)
    err500 = np.max(np.abs(w_e1.F_series(t) - primitive_F(t, 1.0)))
    assert err500 < 0.02
    w1000 = synthesize(1.0, 5.0, n_terms=1000, substeps=8192)
    err1000 = np.max(np.abs(w1000.F_series(t) - primitive_F(t, 1.0)))
    assert err1000 <= err500


@settings(max_examples=30, deadline=None)
@given(st.floats(-50.0, 50.0))
def test_f_even_and_periodic(t):
    w = synthesize(17.0, 6.0, n_terms=64, substeps=128)
    assert driving_f(-t, w) == driving_f(t, w)
    assert driving_f(t + w.period, w) == pytest.approx(driving_f(t, w), abs=1e-9 * np.sum(np.abs(w.c)))


def test_parity_exact(w_e1):
    t = np.random.default_rng(3).uniform(-10, 10, 500)
    assert np.max(np.abs(driving_f(t, w_e1) - driving_f(-t, w_e1))) == 0.0


def test_f_integrates_to_F(w_e1):
    t0 = w_e1.T / 3
    # f is a finite cosine sum; integrate it through each oscillation
    n = 40 * len(w_e1.b)
    val = quad(lambda t: driving_f(t, w_e1), 0.0, t0, limit=n, epsabs=1e-12)[0]
    assert val == pytest.approx(w_e1.F_series(t0), abs=1e-9)


def test_uniform_evaluation_matches_direct(w_e1):
    n = 1024
    t0 = 0.123
    t = t0 + np.arange(n) * w_e1.period / n
    assert np.max(np.abs(w_e1.F_uniform(t0, n) - w_e1.F_series(t))) < 1e-11
    assert np.max(np.abs(w_e1.f_uniform(t0, n) - w_e1.f(t))) < 1e-9 * np.abs(w_e1.c).sum()


def test_uniform_evaluation_coarse_grid_aliases_correctly(w_e1):
    n = 300  # fewer samples than harmonics
    t = np.arange(n) * w_e1.period / n
    assert np.max(np.abs(w_e1.F_uniform(0.0, n) - w_e1.F_series(t))) < 1e-11


def test_export_grid(w_e1):
    t, f = export_waveform(w_e1, 4)
    assert np.allclose(t, [0, w_e1.T / 2, w_e1.T, 3 * w_e1.T / 2])
    assert f[0] == pytest.approx(np.sum(w_e1.c), rel=1e-12)
    with pytest.raises(DomainError):
        export_waveform(w_e1, 1)


def test_csv_round_trip_is_exact(w_e1):
    buf = io.StringIO()
    write_waveform_csv(buf, w_e1, 257)
    buf.seek(0)
    t, f = read_waveform_csv(buf)
    assert len(t) == 257
    assert np.array_equal(driving_f(t, w_e1), f)
    assert "\r" not in buf.getvalue()


def test_imaginary_tunneling_cancels():
    w = synthesize(40.0, 8.0)
    F = w.F_uniform(0.0, 1 << 14)
    assert abs(np.mean(np.sin(F)) * w.period) < 1e-8


def _normalization_deviation(omega):
    worst = 0.0
    for E in np.arange(10.0, 200.0, 9.5):
        w = synthesize(float(E), omega)
        n = 1 << 14
        t = (np.arange(n) + 0.5) * w.T / n
        lhs = np.mean(np.cos(w.F_series(t)))
        rhs = (g_value(E).real - 2 / (4 * E * E + 1)) / w.T
        worst = max(worst, abs(lhs - rhs) * w.T)
    return worst


def test_normalization_long_window():
    # T = pi: the integral over [0, T] captures Re g up to the tail of g~
    assert _normalization_deviation(2.0) < 0.02


@pytest.mark.xfail(strict=True, reason="with T = 2 pi / omega the integration window stops short of "
                   "the decay of g~; the neglected tail exceeds 0.02 for omega >= 5")
@pytest.mark.parametrize("omega", [5.0, 8.0, 16.0])
def test_normalization_short_window(omega):
    assert _normalization_deviation(omega) < 0.02


def test_static_and_monochromatic_constructors():
    s = FourierWaveform.static(5.0)
    assert np.all(s.b == 0)
    m = FourierWaveform.monochromatic(3.0, 4.0)
    t = np.linspace(0, 5, 50)
    assert np.allclose(m.f(t), 3.0 * np.cos(4.0 * t), atol=1e-12)
    assert np.allclose(m.F_series(t), 0.75 * np.sin(4.0 * t), atol=1e-12)
