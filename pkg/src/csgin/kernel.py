"""Backend selection for the reduction kernels.

The compiled kernel (``csgin._ckernel``) handles prime fields with
``p < 2**31``; rationals and larger primes always use the pure-Python kernel.
Set ``CSGIN_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernel

try:
    if os.environ.get("CSGIN_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = _ckernel.BACKEND if _ckernel is not None else _pykernel.BACKEND


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernel is not None else [])


def context(nvars: int, matrix, p: int, backend: str | None = None):
    """Kernel context for ``nvars`` variables, order ``matrix``, characteristic ``p``."""
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not built")
        if 0 < p < 2**31:
            return _ckernel.Context(nvars, matrix, p)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _pykernel.Context(nvars, matrix, p)
