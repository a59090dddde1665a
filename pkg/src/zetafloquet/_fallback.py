"""Pure numpy versions of the compiled kernels in ``_kernels.pyx``."""
import numpy as np


def su2_step_matrices(hx, hy, hz, dt):
    """Stack of ``exp(-i dt h_m . sigma)``, shape ``(N, 2, 2)``."""
    hx = np.asarray(hx, dtype=float)
    hy = np.asarray(hy, dtype=float)
    hz = np.asarray(hz, dtype=float)
    n = np.sqrt(hx * hx + hy * hy + hz * hz)
    th = n * dt
    safe = np.where(n > 0.0, n, 1.0)
    s = np.where(n > 0.0, np.sin(th) / safe, dt)
    c = np.cos(th)
    out = np.empty(hx.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = c - 1j * s * hz
    out[..., 1, 1] = c + 1j * s * hz
    out[..., 0, 1] = -1j * s * hx - s * hy
    out[..., 1, 0] = -1j * s * hx + s * hy
    return out


def su2_ordered_product(hx, hy, hz, dt):
    """Return ``prod_{m = N-1 .. 0} exp(-i dt h_m . sigma)`` via pairwise reduction."""
    hx = np.asarray(hx, dtype=float)
    if not (len(hx) == len(hy) == len(hz)):
        raise ValueError("field components must have equal length")
    mats = su2_step_matrices(hx, hy, hz, dt)
    if len(mats) == 0:
        return np.eye(2, dtype=complex)
    while len(mats) > 1:
        if len(mats) % 2:
            tail = mats[-1:]
            mats = mats[:-1]
        else:
            tail = None
        # later step multiplies from the left
        mats = np.matmul(mats[1::2], mats[0::2])
        if tail is not None:
            mats = np.concatenate([mats, tail])
    return mats[0].copy()
