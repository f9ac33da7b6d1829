"""
Backend selection for the numeric kernels.

``SPECIALSU_BACKEND=numba`` (default) runs the compiled kernels;
``SPECIALSU_BACKEND=numpy`` runs the vectorized numpy fallbacks. Without an
importable numba the numpy backend is used regardless.
"""

import os

try:
    import numba as nb
except ImportError:  # pragma: no cover
    nb = None

HAVE_NUMBA = nb is not None

_requested = os.environ.get("SPECIALSU_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"SPECIALSU_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

BACKEND = _requested if HAVE_NUMBA else "numpy"


def njit(*args, **kwargs):
    if not HAVE_NUMBA:  # pragma: no cover
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda func: func
    return nb.njit(*args, **kwargs)
