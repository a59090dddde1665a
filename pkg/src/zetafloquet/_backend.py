"""Select the compiled kernels when the extension is built, else the numpy fallback.

Set ``ZETAFLOQUET_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _fallback

BACKEND = "python"
su2_ordered_product = _fallback.su2_ordered_product

if not os.environ.get("ZETAFLOQUET_PURE_PYTHON"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        su2_ordered_product = _kernels.su2_ordered_product
        BACKEND = "cython"


def ordered_product_for(name=None):
    """``su2_ordered_product`` from backend ``name`` ('cython' or 'python'); default is active."""
    if name in (None, BACKEND):
        return su2_ordered_product
    if name == "python":
        return _fallback.su2_ordered_product
    if name == "cython":
        from . import _kernels

        return _kernels.su2_ordered_product
    raise ValueError(f"unknown backend {name!r}")
