"""Brute-force reference implementations, written as literal sums.

Slow by design (pure Python loops over :class:`Quaternion` values); used as
independent oracles by the verification harness on small grids.
"""
import math

from .field import QField
from .quaternion import Quaternion, RootPair, exp_angle, mul


def dft_left(f: QField, roots: RootPair, *, inverse: bool = False) -> QField:
    n1, n2 = f.shape
    sign = 1.0 if inverse else -1.0
    scale = 1.0 / math.sqrt(n1 * n2)
    out = [[None] * n2 for _ in range(n1)]
    for u1 in range(n1):
        for u2 in range(n2):
            acc = Quaternion()
            for x1 in range(n1):
                e1 = exp_angle(roots.mu, sign * 2.0 * math.pi * x1 * u1 / n1)
                for x2 in range(n2):
                    e2 = exp_angle(roots.nu, sign * 2.0 * math.pi * x2 * u2 / n2)
                    kernel = mul(e2, e1) if inverse else mul(e1, e2)
                    acc = acc + mul(kernel, f[x1, x2])
            out[u1][u2] = tuple(acc * scale)
    return QField(out)


def convolve(f: QField, g: QField) -> QField:
    n1, n2 = f.shape
    out = [[None] * n2 for _ in range(n1)]
    for x1 in range(n1):
        for x2 in range(n2):
            acc = Quaternion()
            for y1 in range(n1):
                for y2 in range(n2):
                    acc = acc + mul(f[y1, y2], g[(x1 - y1) % n1, (x2 - y2) % n2])
            out[x1][x2] = tuple(acc)
    return QField(out)


def correlate(f: QField, g: QField) -> QField:
    n1, n2 = f.shape
    out = [[None] * n2 for _ in range(n1)]
    for y1 in range(n1):
        for y2 in range(n2):
            acc = Quaternion()
            for x1 in range(n1):
                for x2 in range(n2):
                    acc = acc + mul(f[x1, x2], g[(x1 + y1) % n1, (x2 + y2) % n2])
            out[y1][y2] = tuple(acc)
    return QField(out)
