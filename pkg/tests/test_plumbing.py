import io
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.linalg import expm

from zetafloquet import _backend, _fallback
from zetafloquet.csvio import fmt, read_csv, to_csv_string, write_csv
from zetafloquet.floquet import SIGMA_X, SIGMA_Y, SIGMA_Z


@given(st.floats(allow_nan=False))
def test_float_round_trip(x):
    assert float(fmt(x)) == x


def test_fmt_cells():
    assert fmt(None) == ""
    assert fmt(3) == "3"
    assert fmt(np.int64(4)) == "4"
    assert fmt(float("nan")) == "nan"
    assert fmt(0.1) == "0.10000000000000001"


def test_csv_lf_and_round_trip(tmp_path):
    text = to_csv_string(["a", "b"], [[1, 0.5], ["x", None]])
    assert text == "a,b\n1,0.5\nx,\n"
    path = tmp_path / "deep" / "t.csv"
    write_csv(str(path), ["a"], [[1.25]])
    assert read_csv(str(path)) == (["a"], [["1.25"]])
    assert read_csv(io.StringIO("")) == ([], [])


def _reference_product(hx, hy, hz, dt):
    U = np.eye(2, dtype=complex)
    for x, y, z in zip(hx, hy, hz):
        U = expm(-1j * dt * (x * SIGMA_X + y * SIGMA_Y + z * SIGMA_Z)) @ U
    return U


@pytest.mark.parametrize("n", [1, 2, 3, 7, 64, 257])
def test_fallback_product_against_expm(n):
    rng = np.random.default_rng(n)
    hx, hy, hz = rng.normal(size=(3, n))
    ref = _reference_product(hx, hy, hz, 0.05)
    assert np.max(np.abs(_fallback.su2_ordered_product(hx, hy, hz, 0.05) - ref)) < 1e-12


@pytest.mark.skipif(_backend.BACKEND != "cython", reason="compiled kernel not built")
@pytest.mark.parametrize("n", [1, 2, 5, 1000])
def test_compiled_product_against_fallback(n):
    rng = np.random.default_rng(100 + n)
    hx, hy, hz = rng.normal(size=(3, n))
    a = _backend.ordered_product_for("cython")(hx, hy, hz, 0.01)
    b = _backend.ordered_product_for("python")(hx, hy, hz, 0.01)
    assert np.max(np.abs(a - b)) < 1e-12


def test_zero_field_step_is_identity():
    z = np.zeros(4)
    assert np.array_equal(_fallback.su2_ordered_product(z, z, z, 0.3), np.eye(2, dtype=complex))


def test_pure_python_switch():
    env = dict(os.environ, ZETAFLOQUET_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import zetafloquet; print(zetafloquet.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.ordered_product_for("fortran")
