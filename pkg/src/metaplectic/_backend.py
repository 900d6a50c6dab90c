"""Select the compiled oracle kernels when available.

Set ``METAPLECTIC_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_compiled = None

if os.environ.get("METAPLECTIC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _compiled = None


def hilbert_search(a, b, p, k):
    if _compiled is not None:
        try:
            return _compiled.hilbert_search(a, b, p, k)
        except OverflowError:
            pass
    return _kernels_py.hilbert_search(a, b, p, k)


def gauss_phase_sum(c, p, n):
    if _compiled is not None:
        try:
            return _compiled.gauss_phase_sum(c, p, n)
        except OverflowError:
            pass
    return _kernels_py.gauss_phase_sum(c, p, n)
