"""Backend selection for the restricted search kernel.

The compiled extension is preferred; set ``TWODP_PURE_PYTHON=1`` to force
the pure-Python implementation (both expose the same ``Searcher`` API).
"""

from __future__ import annotations

import os

from . import _xsearch_py

PySearcher = _xsearch_py.Searcher

try:
    from ._xsearch import Searcher as CompiledSearcher
except ImportError:  # extension not built
    CompiledSearcher = None

if CompiledSearcher is not None and not os.environ.get("TWODP_PURE_PYTHON"):
    Searcher = CompiledSearcher
    BACKEND = "compiled"
else:
    Searcher = PySearcher
    BACKEND = "python"


def use_backend(backend: str | None) -> str:
    """Switch the kernel used by graphs built from now on; returns the name
    of the backend now active."""
    global Searcher, BACKEND
    Searcher = searcher_class(backend)
    BACKEND = "python" if Searcher is PySearcher else "compiled"
    return BACKEND


def searcher_class(backend: str | None = None):
    """Return the Searcher implementation for ``backend`` ("compiled",
    "python", or None for the import-time default)."""
    if backend is None:
        return Searcher
    if backend == "python":
        return PySearcher
    if backend == "compiled":
        if CompiledSearcher is None:
            raise RuntimeError("compiled search kernel is not built")
        return CompiledSearcher
    raise ValueError(f"unknown backend {backend!r}")
