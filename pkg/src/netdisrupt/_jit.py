"""Optional numba acceleration.

Kernels are written once in a numba-compatible subset of Python. Setting
``NETDISRUPT_DISABLE_NUMBA=1`` (or running without numba installed) leaves
them as plain Python functions operating on numpy arrays.
"""
import os

_DISABLED = os.environ.get("NETDISRUPT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    import numba
except ImportError:
    numba = None

NUMBA_ENABLED = numba is not None


def njit(func):
    """Compile ``func`` with numba when enabled, otherwise return it untouched.

    The uncompiled function stays reachable as ``.py_func`` in both cases so
    benchmarks can time the two paths side by side.
    """
    if numba is None:
        func.py_func = func
        return func
    return numba.njit(cache=True)(func)
