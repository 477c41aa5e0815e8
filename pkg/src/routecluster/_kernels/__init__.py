"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the numpy
fallback is otherwise used transparently. Setting ROUTECLUSTER_PURE=1 in
the environment forces the fallback (useful for benchmarking the two
implementations against each other).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _fallback


def _load_active() -> ModuleType:
    if os.environ.get("ROUTECLUSTER_PURE") == "1":
        return _fallback
    try:
        from . import _native
    except ImportError:
        return _fallback
    return _native


active = _load_active()


def active_backend_name() -> str:
    return active.BACKEND_NAME


def available_backends() -> dict[str, ModuleType]:
    """All importable backends keyed by name (for tests and benchmarks)."""
    backends = {_fallback.BACKEND_NAME: _fallback}
    try:
        from . import _native
    except ImportError:
        pass
    else:
        backends[_native.BACKEND_NAME] = _native
    return backends
