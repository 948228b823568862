"""Kernel selection.

The compiled extension is preferred when importable; the numpy kernel is the
fallback so the package works from a plain source checkout. Setting
PLANOPT_PURE_KERNEL=1 forces the fallback, which the parity tests and the
benchmark use to pin down one side of the comparison.
"""

from __future__ import annotations

import os

from . import _kernel_py


def _load():
    if os.environ.get("PLANOPT_PURE_KERNEL") == "1":
        return _kernel_py
    try:
        from . import _speedups  # type: ignore[attr-defined]

        return _speedups
    except ImportError:
        return _kernel_py


kernel = _load()

KERNEL_NAME: str = kernel.KERNEL_NAME

run_phase = kernel.run_phase
