"""Kernel selection.

The compiled module is used when it was built; otherwise the pure-Python
twin takes over.  Both expose ``closure`` and ``compatible_partitions`` with
identical signatures and results.
"""

from array import array

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"
_impl = BACKENDS[BACKEND]


def use_backend(name):
    """Switch the active kernel implementation; returns the previous name."""
    global BACKEND, _impl
    if name not in BACKENDS:
        raise ValueError(f"kernel backend {name!r} unavailable (have {sorted(BACKENDS)})")
    prev = BACKEND
    BACKEND, _impl = name, BACKENDS[name]
    return prev


def flat_tables(A):
    """Flattened int arrays ``(n, meet, join, unary, nun)`` for an algebra, cached on it."""
    cached = getattr(A, "_flat", None)
    if cached is not None:
        return cached
    n = A.n
    meet = array("i", (v for row in A.meet for v in row))
    join = array("i", (v for row in A.join for v in row))
    ops = A.unary_ops
    unary = array("i", (v for op in ops for v in op)) if ops else array("i", [0])
    cached = (n, meet, join, unary, len(ops))
    A._flat = cached
    return cached


def closure(A, labels, seeds):
    n, meet, join, unary, nun = flat_tables(A)
    return _impl.closure(n, meet, join, unary, nun, labels, seeds)


def compatible_partitions(A):
    n, meet, join, unary, nun = flat_tables(A)
    return _impl.compatible_partitions(n, meet, join, unary, nun)
