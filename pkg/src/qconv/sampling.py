"""Seeded random fields and roots for verification and benchmarks.

Field components are uniform in [-1, 1]; roots are uniform on the unit sphere
(a normalized vector of standard normals).
"""
from __future__ import annotations

import math

import numpy as np

from .field import QField
from .quaternion import Quaternion, Root, RootPair, make_root


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.uint64(seed))


def random_quaternion(rng: np.random.Generator) -> Quaternion:
    return Quaternion(*rng.uniform(-1.0, 1.0, size=4))


def random_root(rng: np.random.Generator) -> Root:
    while True:
        v = rng.standard_normal(3)
        if np.linalg.norm(v) > 1e-6:
            return make_root(*v)


def _orthonormal_to(rng, r: np.ndarray) -> np.ndarray:
    while True:
        w = np.cross(r, rng.standard_normal(3))
        n = np.linalg.norm(w)
        if n > 1e-6:
            return w / n


def root_at_angle(rng: np.random.Generator, mu: Root, angle: float) -> Root:
    """Random root making ``angle`` (radians) with ``mu``; then a = -2 cos(angle)."""
    r = np.array(mu.vector())
    w = _orthonormal_to(rng, r)
    return make_root(*(math.cos(angle) * r + math.sin(angle) * w))


def random_pair(rng: np.random.Generator) -> RootPair:
    return RootPair(random_root(rng), random_root(rng))


def perpendicular_pair(rng: np.random.Generator) -> RootPair:
    """Random mu, and nu random in the plane orthogonal to mu."""
    mu = random_root(rng)
    r = np.array(mu.vector())
    return RootPair(mu, make_root(*_orthonormal_to(rng, r)))


def pair_with_anticommutator(rng: np.random.Generator, a: float) -> RootPair:
    """Random pair with ``mu nu + nu mu = a`` (|a| <= 2)."""
    mu = random_root(rng)
    angle = math.acos(max(-1.0, min(1.0, -a / 2.0)))
    return RootPair(mu, root_at_angle(rng, mu, angle))


def spread_pairs(rng: np.random.Generator, count: int) -> list[RootPair]:
    """Pairs whose |a| covers ~0, ~2 and values in between."""
    targets = [0.0, 1e-9, -1e-6, 1.999999, -1.999999, 2.0, -2.0]
    out = []
    for k in range(count):
        if k < len(targets):
            a = targets[k]
        else:
            a = float(rng.uniform(-2.0, 2.0))
        out.append(pair_with_anticommutator(rng, a))
    return out


def random_field(rng: np.random.Generator, n1: int, n2: int | None = None,
                 *, pure: bool = False) -> QField:
    return QField.random(rng, n1, n1 if n2 is None else n2, pure=pure)
