"""Hot exact-arithmetic kernels with a compiled core and a pure-Python fallback.

The compiled ``_ckernel`` extension is used when it was built; otherwise, or
when ``ADDAX_PURE_PYTHON=1`` is set, the ``_pykernel`` module is used.  Both
expose the same functions and give identical results.
"""

import os

from . import _pykernel

if os.environ.get("ADDAX_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernel
else:
    try:
        from . import _ckernel as _impl
    except ImportError:  # extension not built
        _impl = _pykernel

BACKEND = _impl.BACKEND
gauss_matmul = _impl.gauss_matmul
content_gcd = _impl.content_gcd


def available_backends():
    """Map backend name -> module for every importable implementation."""
    out = {"python": _pykernel}
    try:
        from . import _ckernel
    except ImportError:
        pass
    else:
        out["cython"] = _ckernel
    return out
