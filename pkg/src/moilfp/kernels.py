"""Select the tableau kernels at import time.

The compiled ``_ckernels`` extension is used when it was built and gmpy2
rationals are active; otherwise the pure-Python ``_pykernels`` run. Set
``MOILFP_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels
from .model import HAVE_GMPY2

BACKEND = "python"
_impl = _pykernels

if HAVE_GMPY2 and os.environ.get("MOILFP_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels

pivot = _impl.pivot
sub_scaled = _impl.sub_scaled
gammas = _impl.gammas


def use(backend):
    """Switch backends at runtime (``"compiled"`` or ``"python"``); used by benchmarks."""
    global pivot, sub_scaled, gammas, BACKEND
    if backend == "compiled":
        from . import _ckernels as impl
    elif backend == "python":
        impl = _pykernels
    else:
        raise ValueError(f"unknown kernel backend {backend!r}")
    pivot, sub_scaled, gammas = impl.pivot, impl.sub_scaled, impl.gammas
    BACKEND = backend
