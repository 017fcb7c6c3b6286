"""Quaternion fields sampled on a cyclic ``n1 x n2`` grid."""
from __future__ import annotations

from numbers import Real
from typing import NamedTuple

import numpy as np

from .errors import ShapeMismatch
from .quaternion import Quaternion, qmul_array

__all__ = ["QField", "ReflectionIndex", "REFLECTIONS", "as_reflection"]


class ReflectionIndex(NamedTuple):
    """Sign flips ``(phi1, phi2)`` applied to the arguments of a field."""

    phi1: int = 0
    phi2: int = 0

    def __str__(self):
        return f"{self.phi1}{self.phi2}"


REFLECTIONS = (ReflectionIndex(0, 0), ReflectionIndex(0, 1),
               ReflectionIndex(1, 0), ReflectionIndex(1, 1))


def as_reflection(phi) -> ReflectionIndex:
    phi = ReflectionIndex(*phi)
    if phi.phi1 not in (0, 1) or phi.phi2 not in (0, 1):
        raise ValueError(f"reflection components must be 0 or 1, got {tuple(phi)}")
    return phi


def _negated_indices(n: int) -> np.ndarray:
    return (-np.arange(n)) % n


class QField:
    """An ``n1 x n2`` grid of quaternions, stored row-major.

    ``data`` is a read-only float64 array of shape ``(n1, n2, 4)``. Fields are
    values: every operation returns a new field.
    """

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.array(data, dtype=np.float64)
        if arr.ndim != 3 or arr.shape[2] != 4:
            raise ValueError(f"field data must have shape (n1, n2, 4), got {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("field dimensions must be positive")
        arr.setflags(write=False)
        self.data = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "QField":
        # Skip the defensive copy for arrays produced internally.
        obj = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.float64)
        arr.setflags(write=False)
        obj.data = arr
        return obj

    @classmethod
    def zeros(cls, n1: int, n2: int) -> "QField":
        return cls._wrap(np.zeros((n1, n2, 4)))

    @classmethod
    def constant(cls, n1: int, n2: int, q) -> "QField":
        q = _as_qarray(q)
        return cls._wrap(np.broadcast_to(q, (n1, n2, 4)).copy())

    @classmethod
    def delta(cls, n1: int, n2: int, q=1.0, at: tuple[int, int] = (0, 0)) -> "QField":
        arr = np.zeros((n1, n2, 4))
        arr[at[0] % n1, at[1] % n2] = _as_qarray(q)
        return cls._wrap(arr)

    @classmethod
    def from_components(cls, w, x=None, y=None, z=None) -> "QField":
        w = np.asarray(w, dtype=np.float64)
        comps = [w] + [np.zeros_like(w) if c is None else np.asarray(c, dtype=np.float64)
                       for c in (x, y, z)]
        return cls._wrap(np.stack(comps, axis=-1))

    @classmethod
    def random(cls, rng: np.random.Generator, n1: int, n2: int, *, pure: bool = False) -> "QField":
        """Components uniform in [-1, 1]; ``pure`` zeroes the scalar part."""
        arr = rng.uniform(-1.0, 1.0, size=(n1, n2, 4))
        if pure:
            arr[..., 0] = 0.0
        return cls._wrap(arr)

    @property
    def n1(self) -> int:
        return self.data.shape[0]

    @property
    def n2(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape[:2]

    def __getitem__(self, idx) -> Quaternion:
        return Quaternion.from_array(self.data[idx])

    def __len__(self):
        return self.n1 * self.n2

    def __repr__(self):
        return f"QField(n1={self.n1}, n2={self.n2})"

    def check_same_shape(self, other: "QField") -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"field shapes differ: {self.shape} vs {other.shape}")

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QField):
            self.check_same_shape(other)
            return QField._wrap(self.data + other.data)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, QField):
            self.check_same_shape(other)
            return QField._wrap(self.data - other.data)
        return NotImplemented

    def __neg__(self):
        return QField._wrap(-self.data)

    def __mul__(self, other):
        """``f * c``: right multiplication by a real or a quaternion constant."""
        if isinstance(other, Real):
            return QField._wrap(self.data * float(other))
        if isinstance(other, Quaternion):
            return QField._wrap(qmul_array(self.data, other.to_array()))
        return NotImplemented

    def __rmul__(self, other):
        """``c * f``: left multiplication by a real or a quaternion constant."""
        if isinstance(other, Real):
            return QField._wrap(self.data * float(other))
        if isinstance(other, Quaternion):
            return QField._wrap(qmul_array(other.to_array(), self.data))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return QField._wrap(self.data / float(other))
        return NotImplemented

    def pointwise(self, other: "QField") -> "QField":
        """Pointwise quaternion product, ``self`` on the left."""
        self.check_same_shape(other)
        return QField._wrap(qmul_array(self.data, other.data))

    def reflect(self, phi) -> "QField":
        """Negate the grid arguments selected by ``phi`` (indices taken mod n)."""
        phi = as_reflection(phi)
        arr = self.data
        if phi.phi1:
            arr = arr[_negated_indices(self.n1)]
        if phi.phi2:
            arr = arr[:, _negated_indices(self.n2)]
        return QField._wrap(arr)

    def shift(self, s1: int, s2: int) -> "QField":
        """Cyclic shift: ``out(x) = self(x - s)``."""
        return QField._wrap(np.roll(self.data, (s1, s2), axis=(0, 1)))

    # comparisons ----------------------------------------------------------

    def norm(self) -> float:
        """Euclidean norm of all components (sqrt of sum of |f(x)|^2)."""
        return float(np.sqrt(np.sum(self.data * self.data)))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.data)))

    def max_abs_diff(self, other: "QField") -> float:
        self.check_same_shape(other)
        return float(np.max(np.abs(self.data - other.data)))

    def allclose(self, other: "QField", tol: float) -> bool:
        return self.max_abs_diff(other) <= tol

    def bit_equal(self, other: "QField") -> bool:
        return self.shape == other.shape and self.data.tobytes() == other.data.tobytes()


def _as_qarray(q) -> np.ndarray:
    if isinstance(q, Quaternion):
        return q.to_array()
    if isinstance(q, Real):
        return np.array([float(q), 0.0, 0.0, 0.0])
    arr = np.asarray(q, dtype=np.float64)
    if arr.shape != (4,):
        raise ValueError(f"expected a quaternion, got {q!r}")
    return arr
