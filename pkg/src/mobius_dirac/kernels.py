"""Backend selection for the hot loops.

The compiled extension is used when it was built; set ``MOBIUS_DIRAC_PURE=1``
to force the pure-Python fallback.
"""

import os

import numpy as np

from ._ext import _kernels_py

if os.environ.get("MOBIUS_DIRAC_PURE", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from ._ext import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"


def numerov(q, h, y0, y1, reverse=False):
    return _impl.numerov(np.ascontiguousarray(q, dtype=float), float(h), float(y0), float(y1),
                         bool(reverse))


def count_sign_changes(y, lo=0, hi=None):
    y = np.ascontiguousarray(y, dtype=float)
    return int(_impl.count_sign_changes(y, int(lo), int(len(y) if hi is None else hi)))


def jacobi(n, a, b, x):
    return _impl.jacobi(int(n), float(a), float(b), np.ascontiguousarray(x, dtype=float))
