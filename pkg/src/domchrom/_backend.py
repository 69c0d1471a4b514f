"""Search-kernel selection: compiled extension when available, else pure Python.

``DOMCHROM_BACKEND=python`` forces the fallback; ``DOMCHROM_BACKEND=cython``
insists on the compiled kernel and fails loudly when it is missing.  Both
kernels produce identical results and statistics.
"""

from __future__ import annotations

import os


def _load():
    choice = os.environ.get("DOMCHROM_BACKEND", "").strip().lower()
    if choice in ("py", "python", "pure"):
        from . import _kernel_py

        return _kernel_py, "python"
    if choice in ("c", "cython", "compiled"):
        from . import _kernel  # raises ImportError when not built

        return _kernel, "cython"
    try:
        from . import _kernel  # type: ignore[attr-defined]

        return _kernel, "cython"
    except ImportError:
        from . import _kernel_py

        return _kernel_py, "python"


_KERNEL, BACKEND = _load()


def get_kernel():
    """The kernel module selected at import time."""
    return _KERNEL
