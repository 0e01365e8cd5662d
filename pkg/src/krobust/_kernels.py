"""Backend selection for the bitmask kernels.

The compiled extension is used when it imports and the instance fits in 64
bits; otherwise the pure-Python twin runs. Set ``KROBUST_PURE_PYTHON=1`` to
force the fallback.
"""

from __future__ import annotations

import os

from krobust import _sweep_py

DOMINATION = _sweep_py.DOMINATION
MATCHING = _sweep_py.MATCHING

_compiled = None
if not os.environ.get("KROBUST_PURE_PYTHON"):
    try:
        from krobust import _sweep as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def connected(n, adj, backend=None):
    impl = _pick(backend, n, 0)
    return impl.connected(n, adj)


def removal_sweep(n, adj, eu, ev, kind, payload, k, filtered=True, backend=None):
    impl = _pick(backend, n, len(eu))
    return impl.removal_sweep(n, adj, eu, ev, kind, payload, k, filtered)


def _pick(backend, n, m):
    if backend == "python":
        return _sweep_py
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        return _compiled
    if _compiled is not None and n <= 64 and m <= 64:
        return _compiled
    return _sweep_py
