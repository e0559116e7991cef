"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used. Setting ``EXACTLA_PURE_PYTHON=1``
forces the fallback.
"""
import os

from . import _pykernels

if os.environ.get("EXACTLA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

_NAMES = ("matmul", "div_exact_int", "bareiss", "bareiss_int", "inverse_mod", "matvec_mod", "lift_step_int")


def _bind(impl):
    g = globals()
    g["BACKEND"] = impl.BACKEND
    for name in _NAMES:
        g[name] = getattr(impl, name)


_bind(_impl)


def available_backends():
    """Map backend name to kernel module for every importable implementation."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found


def use_backend(name):
    """Switch every kernel to backend ``name`` ("python" or "cython"); returns the previous name."""
    found = available_backends()
    if name not in found:
        raise ValueError(f"kernel backend {name!r} is not available")
    previous = BACKEND
    _bind(found[name])
    return previous
