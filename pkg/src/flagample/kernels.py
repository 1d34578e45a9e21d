"""Kernel backend selection.

The compiled extension is used when it imported cleanly and the
FLAGAMPLE_PURE environment variable is not set; otherwise the pure
Python kernel.  Both expose enumerate_group with the same contract and
bit-identical output order.
"""

from __future__ import annotations

import os

from . import _pykernel

try:  # pragma: no cover - depends on the build environment
    from . import _speedups  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover
    _speedups = None


def _active():
    if os.environ.get("FLAGAMPLE_PURE") == "1" or _speedups is None:
        return _pykernel
    return _speedups


def backend_name() -> str:
    """Name of the kernel in use: 'c' or 'python'."""
    return _active().BACKEND


def available_backends() -> dict:
    """All importable kernels, keyed by backend name."""
    out = {_pykernel.BACKEND: _pykernel}
    if _speedups is not None:
        out[_speedups.BACKEND] = _speedups
    return out


def enumerate_group(gens, key_positions, cap):
    """Dispatch to the active kernel; see _pykernel.enumerate_group."""
    return _active().enumerate_group(gens, key_positions, cap)
