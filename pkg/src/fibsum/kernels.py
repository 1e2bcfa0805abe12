"""Backend selection for the hot kernels.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
pure-Python module is used.  Both expose ``fib_pair``, ``binomial`` and
``dot`` with identical semantics.
"""
from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"
_impl = BACKENDS[BACKEND]

fib_pair = _impl.fib_pair
binomial = _impl.binomial
dot = _impl.dot


def use_backend(name: str) -> str:
    """Rebind the module-level kernels to another backend; returns the previous name.

    Callers holding results computed under the old backend (for example the
    Fibonacci cache in ``sequences``) should clear them if they want timings
    to reflect the new one.
    """
    global BACKEND, fib_pair, binomial, dot
    impl = get_backend(name)
    previous = BACKEND
    BACKEND = name
    fib_pair, binomial, dot = impl.fib_pair, impl.binomial, impl.dot
    return previous


def get_backend(name: str) -> ModuleType:
    try:
        return BACKENDS[name]
    except KeyError:
        raise LookupError(f"kernel backend {name!r} is not available") from None
