"""Kernel selection: compiled extension if built, pure Python otherwise.

Set ``ARGLAB_PURE=1`` in the environment to force the pure kernels even when
the compiled module is available (used by the benchmark and the test suite).
"""

from __future__ import annotations

import os

if os.environ.get("ARGLAB_PURE"):
    COMPILED_KERNEL = None
else:
    try:
        from . import _accel as COMPILED_KERNEL  # type: ignore[no-redef]
    except ImportError:
        COMPILED_KERNEL = None


def compiled() -> bool:
    """True when the compiled enumeration kernels are in use."""
    return COMPILED_KERNEL is not None
