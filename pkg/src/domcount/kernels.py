"""Backend selection for the hot kernels.

The environment variable DOMCOUNT_BACKEND picks the implementation at import
time: "numba" requires the jitted kernels, "numpy" forces the pure-numpy
fallback, and "auto" (the default) tries numba first.  Both backends produce
bit-identical results; only throughput differs.
"""

from __future__ import annotations

import os
from types import ModuleType

ENV_VAR = "DOMCOUNT_BACKEND"

_VALID = ("auto", "numba", "numpy")


def load_backend(name: str) -> ModuleType:
    """Import a kernel backend by name ("numba" or "numpy")."""
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if name == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    raise ValueError(f"unknown backend {name!r}: expected 'numba' or 'numpy'")


def _select() -> ModuleType:
    choice = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if choice not in _VALID:
        raise RuntimeError(f"{ENV_VAR}={choice!r} not recognized: expected one of {_VALID}")
    if choice == "auto":
        try:
            return load_backend("numba")
        except ImportError:
            return load_backend("numpy")
    return load_backend(choice)


_active = _select()


def active_backend() -> str:
    """Name of the backend selected at import time."""
    return _active.BACKEND_NAME


def get_backend(name: str | None = None) -> ModuleType:
    """The active backend, or an explicitly named one (perf comparisons)."""
    return _active if name is None else load_backend(name)
