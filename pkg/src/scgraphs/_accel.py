"""Numba switch.

Set ``SCGRAPHS_NUMBA=0`` to force the pure-numpy kernels (useful under a
debugger or where numba is unavailable).  When numba cannot be imported the
numpy path is used automatically.
"""

import os

_flag = os.environ.get("SCGRAPHS_NUMBA", "1").strip().lower()
_requested = _flag not in ("0", "false", "no", "off")

try:
    from numba import njit as _njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _njit = None
    NUMBA_AVAILABLE = False

USE_NUMBA = _requested and NUMBA_AVAILABLE


def njit(func=None, **kwargs):
    """``numba.njit`` when numba is importable, identity otherwise."""
    if not NUMBA_AVAILABLE:
        if func is not None:
            return func
        return lambda f: f
    if func is not None:
        return _njit(**kwargs)(func)
    return _njit(**kwargs)
