"""Backend selection for the hot word kernels.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python ``_pure`` module is used. Setting ``ARTINKIT_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os

from . import _pure

BACKEND = "python"

if os.environ.get("ARTINKIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pure
else:
    _impl = _pure

free_reduce = _impl.free_reduce
raag_normal_form = _impl.raag_normal_form
garside_extend = _impl.garside_extend

__all__ = ["BACKEND", "free_reduce", "raag_normal_form", "garside_extend"]
