"""Kernel backend selection.

The compiled extension ``cudim._kernels`` is preferred when it imported
cleanly; otherwise the pure-Python reference ``cudim._kernels_py`` is
used.  Both expose the same functions with identical semantics (same
iteration order, same first-counterexample reporting), so the choice only
affects speed.  ``CUDIM_BACKEND=py`` in the environment forces the
fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("CUDIM_BACKEND") == "py":
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _compiled

        kernels = _compiled
        BACKEND = "compiled"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"


def backend_name() -> str:
    return BACKEND
