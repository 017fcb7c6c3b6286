"""File formats: QF01 binary fields, P6 PPM images, and root-pair strings.

QF01 layout (all little-endian)::

    bytes 0-3    b"QF01"
    bytes 4-7    n1  (uint32)
    bytes 8-11   n2  (uint32)
    bytes 12-    n1*n2 quaternions as float64 (w, x, y, z), row-major

PPM pixels (r, g, b) map to the pure quaternion (r i + g j + b k) / 255.
"""
from __future__ import annotations

import math
import re
import struct
import warnings
from pathlib import Path

import numpy as np

from .errors import BadMagic, FieldFormatError, ParseError, TruncatedPayload, UnsupportedFormat
from .field import QField
from .quaternion import RootPair, make_root

__all__ = [
    "MAGIC", "HEADER_SIZE", "ScalarPartWarning",
    "field_to_bytes", "field_from_bytes", "read_field", "write_field",
    "read_ppm", "write_ppm", "ppm_bytes", "read_any", "write_any",
    "parse_roots", "ROOT_PRESETS",
]

MAGIC = b"QF01"
_HEADER = struct.Struct("<4sII")
HEADER_SIZE = _HEADER.size
_DTYPE = np.dtype("<f8")

SCALAR_WARN_LEVEL = 1e-6


class ScalarPartWarning(UserWarning):
    """A field with a non-negligible scalar part was written as an image."""


# -- QF01 ------------------------------------------------------------------

def field_to_bytes(f: QField) -> bytes:
    return _HEADER.pack(MAGIC, f.n1, f.n2) + f.data.astype(_DTYPE, copy=False).tobytes()


def field_from_bytes(buf: bytes) -> QField:
    if len(buf) < HEADER_SIZE:
        if not MAGIC.startswith(buf[:4]):
            raise BadMagic(f"expected {MAGIC!r}, got {buf[:4]!r}")
        raise TruncatedPayload(f"header needs {HEADER_SIZE} bytes, got {len(buf)}")
    magic, n1, n2 = _HEADER.unpack_from(buf)
    if magic != MAGIC:
        raise BadMagic(f"expected {MAGIC!r}, got {magic!r}")
    if n1 < 1 or n2 < 1:
        raise FieldFormatError(f"grid dimensions must be positive, got {n1}x{n2}")
    expected = 32 * n1 * n2
    payload = len(buf) - HEADER_SIZE
    if payload < expected:
        raise TruncatedPayload(f"{n1}x{n2} field needs {expected} payload bytes, got {payload}")
    if payload > expected:
        raise FieldFormatError(f"{payload - expected} trailing bytes after payload")
    data = np.frombuffer(buf, dtype=_DTYPE, offset=HEADER_SIZE).reshape(n1, n2, 4)
    return QField._wrap(data.astype(np.float64))


def read_field(path) -> QField:
    return field_from_bytes(Path(path).read_bytes())


def write_field(path, f: QField) -> None:
    Path(path).write_bytes(field_to_bytes(f))


# -- PPM -------------------------------------------------------------------

_TOKEN = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\S+)")


def _ppm_header(buf: bytes):
    tokens = []
    pos = 0
    while len(tokens) < 4:
        m = _TOKEN.match(buf, pos)
        if not m:
            raise UnsupportedFormat("incomplete PPM header")
        tokens.append(m.group(1))
        pos = m.end()
        if tokens[0] != b"P6":
            raise UnsupportedFormat(f"only binary P6 PPM is supported, got {tokens[0][:8]!r}")
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError:
        raise UnsupportedFormat("non-numeric PPM header field") from None
    if maxval != 255:
        raise UnsupportedFormat(f"only maxval 255 is supported, got {maxval}")
    if width < 1 or height < 1:
        raise UnsupportedFormat(f"bad image size {width}x{height}")
    # exactly one whitespace byte separates the header from the raster
    return width, height, pos + 1


def read_ppm(path) -> QField:
    """Read a P6 image as an ``height x width`` pure-quaternion field."""
    buf = Path(path).read_bytes()
    width, height, offset = _ppm_header(buf)
    n = width * height * 3
    raster = np.frombuffer(buf, dtype=np.uint8, count=-1, offset=offset)
    if raster.size < n:
        raise UnsupportedFormat(f"PPM raster truncated: need {n} bytes, got {raster.size}")
    rgb = raster[:n].reshape(height, width, 3).astype(np.float64) / 255.0
    arr = np.zeros((height, width, 4))
    arr[..., 1:] = rgb
    return QField._wrap(arr)


def quantize(f: QField) -> np.ndarray:
    """Vector part to uint8 RGB: clamp to [0, 1], scale, round half up."""
    scalar = float(np.max(np.abs(f.data[..., 0])))
    if scalar > SCALAR_WARN_LEVEL:
        warnings.warn(f"discarding scalar part with max |w| = {scalar:.3e}",
                      ScalarPartWarning, stacklevel=3)
    rgb = np.nan_to_num(f.data[..., 1:], nan=0.0)
    rgb = np.floor(np.clip(rgb, 0.0, 1.0) * 255.0 + 0.5)
    return np.clip(rgb, 0, 255).astype(np.uint8)


def ppm_bytes(f: QField) -> bytes:
    header = f"P6\n{f.n2} {f.n1}\n255\n".encode("ascii")
    return header + quantize(f).tobytes()


def write_ppm(path, f: QField) -> None:
    Path(path).write_bytes(ppm_bytes(f))


# -- dispatch by content / extension ------------------------------------------

def read_any(path) -> QField:
    """Read QF01 or PPM, sniffing the magic bytes."""
    with open(path, "rb") as fh:
        head = fh.read(4)
    if head.startswith(b"P"):
        return read_ppm(path)
    return read_field(path)


def write_any(path, f: QField) -> None:
    """Write PPM for ``*.ppm`` paths, QF01 otherwise."""
    if str(path).lower().endswith(".ppm"):
        write_ppm(path, f)
    else:
        write_field(path, f)


# -- roots -------------------------------------------------------------------

_GRAY = (1.0, 1.0, 1.0)

ROOT_PRESETS = {
    "equal-i": ((1.0, 0.0, 0.0), (1.0, 0.0, 0.0)),
    "perp-ij": ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0)),
    "gray-line": (_GRAY, _GRAY),
}


def _vector(text: str) -> tuple[float, float, float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ParseError(f"expected three comma-separated numbers, got {text!r}")
    try:
        vec = tuple(float(p) for p in parts)
    except ValueError:
        raise ParseError(f"not a number in {text!r}") from None
    if not all(math.isfinite(v) for v in vec):
        raise ParseError(f"non-finite component in {text!r}")
    return vec


def parse_roots(text: str) -> RootPair:
    """Parse ``"perp-ij"``-style presets or ``"b,c,d[;b,c,d]"`` vectors.

    With a single vector nu defaults to mu.
    """
    key = text.strip().lower()
    if key in ROOT_PRESETS:
        mu_vec, nu_vec = ROOT_PRESETS[key]
    else:
        pieces = [p for p in key.split(";")]
        if len(pieces) == 1:
            mu_vec = nu_vec = _vector(pieces[0])
        elif len(pieces) == 2:
            mu_vec, nu_vec = _vector(pieces[0]), _vector(pieces[1])
        else:
            raise ParseError(f"expected one or two vectors separated by ';', got {text!r}")
    return RootPair(make_root(*mu_vec), make_root(*nu_vec))
