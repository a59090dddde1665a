# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: ordered products of closed-form SU(2) step exponentials."""
import numpy as np

from libc.math cimport sin, cos, sqrt


cdef inline void _step(double hx, double hy, double hz, double dt,
                       double complex *m00, double complex *m01,
                       double complex *m10, double complex *m11) noexcept nogil:
    # exp(-i dt (hx sx + hy sy + hz sz)) = cos(th) I - i sin(th)/|h| (h . sigma)
    cdef double n = sqrt(hx * hx + hy * hy + hz * hz)
    cdef double th = n * dt
    cdef double c = cos(th)
    cdef double s
    if n > 0.0:
        s = sin(th) / n
    else:
        s = dt
    m00[0] = c - 1j * s * hz
    m11[0] = c + 1j * s * hz
    m01[0] = -1j * s * hx - s * hy
    m10[0] = -1j * s * hx + s * hy


def su2_ordered_product(const double[::1] hx, const double[::1] hy,
                        const double[::1] hz, double dt):
    """Return ``prod_{m = N-1 .. 0} exp(-i dt h_m . sigma)`` (later steps on the left)."""
    cdef Py_ssize_t n = hx.shape[0], m
    if hy.shape[0] != n or hz.shape[0] != n:
        raise ValueError("field components must have equal length")
    cdef double complex u00 = 1.0, u01 = 0.0, u10 = 0.0, u11 = 1.0
    cdef double complex a00, a01, a10, a11, t00, t01, t10, t11
    with nogil:
        for m in range(n):
            _step(hx[m], hy[m], hz[m], dt, &a00, &a01, &a10, &a11)
            t00 = a00 * u00 + a01 * u10
            t01 = a00 * u01 + a01 * u11
            t10 = a10 * u00 + a11 * u10
            t11 = a10 * u01 + a11 * u11
            u00 = t00
            u01 = t01
            u10 = t10
            u11 = t11
    out = np.empty((2, 2), dtype=np.complex128)
    out[0, 0] = u00
    out[0, 1] = u01
    out[1, 0] = u10
    out[1, 1] = u11
    return out
