"""Select the compiled kernels when available, else the pure-Python ones.

Set ``DAEHEE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("DAEHEE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
else:
    _impl = _kernels_py

convolve = _impl.convolve
power_sums = _impl.power_sums
stirling1_rows = _impl.stirling1_rows
stirling2_rows = _impl.stirling2_rows

__all__ = [
    "BACKEND",
    "convolve",
    "power_sums",
    "stirling1_rows",
    "stirling2_rows",
]
