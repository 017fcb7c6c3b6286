"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy fallback.
Set ``QCONV_BACKEND=python`` to force the fallback. ``QCONV_THREADS`` caps the
number of OpenMP threads used by the compiled kernels.
"""
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels


def available() -> list[str]:
    return sorted(_BACKENDS)


def get(name: str | None = None):
    """Return the kernel module called ``name`` (default: the active one)."""
    if name is None:
        return kernels
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available; have {available()}") from None


def _select():
    wanted = os.environ.get("QCONV_BACKEND", "").strip().lower()
    if wanted:
        return get(wanted)
    return _ckernels if _ckernels is not None else _pykernels


def num_threads() -> int:
    raw = os.environ.get("QCONV_THREADS")
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise ValueError(f"QCONV_THREADS must be a positive integer, got {raw!r}")
    return n


kernels = _select()
