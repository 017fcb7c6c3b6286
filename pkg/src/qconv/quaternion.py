"""Quaternion arithmetic and square roots of -1.

Scalars are plain Python floats; arrays of quaternions are numpy arrays whose
last axis has length 4 and holds ``(w, x, y, z)``, i.e. ``w + x i + y j + z k``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Real

import numpy as np

from .errors import ZeroVector

__all__ = [
    "Quaternion", "Root", "RootPair",
    "ONE", "I", "J", "K",
    "mul", "scalar_part", "vector_part", "conj",
    "make_root", "anticommutator", "commuting_part", "exp_angle",
    "qmul_array",
]


@dataclass(frozen=True, slots=True, eq=False)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.w, self.x, self.y, self.z) == (other.w, other.x, other.y, other.z)
        if isinstance(other, Real):
            return self == Quaternion(float(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    @classmethod
    def from_array(cls, arr) -> "Quaternion":
        w, x, y, z = (float(c) for c in arr)
        return cls(w, x, y, z)

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=np.float64)

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, Real):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        if isinstance(other, (Quaternion, Real)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Real):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, Real):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # Only real scalars land here; quaternion * quaternion uses __mul__.
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self) -> float:
        return math.sqrt(self.w * self.w + self.x * self.x
                         + self.y * self.y + self.z * self.z)

    def norm(self) -> float:
        return abs(self)

    def conj(self) -> "Quaternion":
        return conj(self)

    def vector(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def isclose(self, other, tol: float = 1e-12) -> bool:
        return abs(self - other) <= tol

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True, slots=True, repr=False, eq=False)
class Root(Quaternion):
    """Unit pure quaternion, a square root of -1.

    Build these with :func:`make_root`; the constructor only checks the
    invariants.
    """

    def __post_init__(self):
        if self.w != 0.0:
            raise ValueError(f"root must be pure, got scalar part {self.w!r}")
        if abs(abs(self) - 1.0) > 1e-12:
            raise ValueError(f"root must have unit norm, got {abs(self)!r}")

    def __neg__(self):
        return Root(0.0, -self.x, -self.y, -self.z)

    def __repr__(self):
        return f"Root({self.x!r}, {self.y!r}, {self.z!r})"


@dataclass(frozen=True)
class RootPair:
    """Ordered pair of roots with their anticommutator ``a = mu nu + nu mu``."""

    mu: Root
    nu: Root
    a: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "a", anticommutator(self.mu, self.nu))

    @classmethod
    def single(cls, mu: Root) -> "RootPair":
        return cls(mu, mu)

    @property
    def munu(self) -> Quaternion:
        return mul(self.mu, self.nu)

    @property
    def numu(self) -> Quaternion:
        return mul(self.nu, self.mu)

    def is_perpendicular(self, tol: float = 1e-12) -> bool:
        return abs(self.a) <= tol

    def is_single(self) -> bool:
        return self.mu == self.nu

    def coefficient(self, name: str) -> Quaternion:
        """Resolve a symbolic coefficient (``"1"``, ``"mu"``, ``"nu mu"``...)."""
        q = ONE
        for sym in name.split():
            if sym == "1":
                continue
            if sym == "mu":
                q = mul(q, self.mu)
            elif sym == "nu":
                q = mul(q, self.nu)
            else:
                raise ValueError(f"unknown coefficient symbol {sym!r} in {name!r}")
        return q


def mul(q1: Quaternion, q2: Quaternion) -> Quaternion:
    a1, b1, c1, d1 = q1.w, q1.x, q1.y, q1.z
    a2, b2, c2, d2 = q2.w, q2.x, q2.y, q2.z
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def scalar_part(q: Quaternion) -> float:
    return q.w


def vector_part(q: Quaternion) -> Quaternion:
    return Quaternion(0.0, q.x, q.y, q.z)


def conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def make_root(b: float, c: float, d: float) -> Root:
    """Normalize ``b i + c j + d k`` to a root of -1."""
    n = math.sqrt(b * b + c * c + d * d)
    if not n >= 1e-300:
        raise ZeroVector(f"cannot build a root from ({b}, {c}, {d})")
    return Root(0.0, b / n, c / n, d / n)


def anticommutator(mu: Quaternion, nu: Quaternion) -> float:
    """Return the real number ``mu nu + nu mu`` for two roots of -1.

    Computed as ``-2 <mu, nu>``; the quaternion anticommutator is checked to
    be scalar.
    """
    s = mul(mu, nu) + mul(nu, mu)
    if abs(vector_part(s)) > 1e-14:
        raise ArithmeticError(f"anticommutator is not real: {s!r}")
    return -2.0 * (mu.x * nu.x + mu.y * nu.y + mu.z * nu.z)


def commuting_part(q: Quaternion, mu: Quaternion, j: int) -> Quaternion:
    """Part of ``q`` commuting (``j=0``) or anticommuting (``j=1``) with ``mu``."""
    if j not in (0, 1):
        raise ValueError("j must be 0 or 1")
    sandwich = mul(mul(mu, q), mu)
    if j == 0:
        return (q - sandwich) * 0.5
    return (q + sandwich) * 0.5


def exp_angle(mu: Quaternion, theta: float) -> Quaternion:
    """``cos(theta) + mu sin(theta)``."""
    return math.cos(theta) + mu * math.sin(theta)


def qmul_array(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product over arrays of shape ``(..., 4)``."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    a1, b1, c1, d1 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    a2, b2, c2, d2 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ], axis=-1)
