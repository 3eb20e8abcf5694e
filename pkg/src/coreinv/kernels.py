"""Oracle scan kernels: the compiled extension when available, else pure Python.

Set ``COREINV_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the
implementation in use.
"""

from __future__ import annotations

import os

from . import _kernels_py

B_AXA, B_XAX, B_AX_STAR, B_XA_STAR, B_COMMUTE = 1, 2, 4, 8, 16
B_XAA, B_AXX, B_AAX, B_XXA = 32, 64, 128, 256

_impl = _kernels_py
BACKEND = "python"
if os.environ.get("COREINV_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

mul_table = _impl.mul_table
star_table = _impl.star_table
scan_flags = _impl.scan_flags

__all__ = ["BACKEND", "mul_table", "star_table", "scan_flags"]
