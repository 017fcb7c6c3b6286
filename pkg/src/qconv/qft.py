"""Discrete left quaternion Fourier transform on a cyclic grid.

Forward transform, with ``C = sqrt(n1 n2)``::

    F(u1, u2) = 1/C sum_x exp(-mu 2pi x1 u1/n1) exp(-nu 2pi x2 u2/n2) f(x1, x2)

and the inverse mirrors it with the exponential order reversed::

    f(x1, x2) = 1/C sum_u exp(nu 2pi x2 u2/n2) exp(mu 2pi x1 u1/n1) F(u1, u2)

The unitary ``1/C`` plays the role of the continuous ``1/(2 pi)``; as a
consequence every ``2 pi`` prefactor in a convolution identity becomes ``C``
and every ``pi/2`` becomes ``C/4``. The DC term sits at index (0, 0).
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import _backend
from .field import QField, ReflectionIndex, as_reflection
from .quaternion import RootPair

__all__ = [
    "reflect", "dft_left", "idft_left", "fast_qft", "qft",
    "exponential_matrix", "is_power_of_two",
    "FORWARD", "INVERSE",
]

FORWARD = "forward"
INVERSE = "inverse"


def reflect(f: QField, phi: ReflectionIndex | tuple[int, int]) -> QField:
    """Sample (m, n) of the result is sample ((-1)^phi1 m, (-1)^phi2 n) of ``f``."""
    return f.reflect(phi)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@lru_cache(maxsize=128)
def _exp_matrix(n: int, root: tuple[float, float, float], sign: int) -> np.ndarray:
    k = np.arange(n)
    # reduce x*u mod n before scaling so large grids keep exact angles
    theta = 2.0 * np.pi * (np.outer(k, k) % n) / n
    s = np.sin(theta) * sign
    out = np.empty((n, n, 4))
    out[..., 0] = np.cos(theta)
    out[..., 1] = s * root[0]
    out[..., 2] = s * root[1]
    out[..., 3] = s * root[2]
    out.setflags(write=False)
    return out


def exponential_matrix(n: int, root, sign: int) -> np.ndarray:
    """Quaternion matrix ``E[u, x] = exp(sign * root * 2pi x u / n)``, shape (n, n, 4)."""
    return _exp_matrix(n, (float(root.x), float(root.y), float(root.z)), int(sign))


def _apply_axis0(e: np.ndarray, arr: np.ndarray) -> np.ndarray:
    return _backend.kernels.qmatmul_left(e, arr, _backend.num_threads())


def _apply_axis1(e: np.ndarray, arr: np.ndarray) -> np.ndarray:
    t = np.ascontiguousarray(arr.transpose(1, 0, 2))
    return _apply_axis0(e, t).transpose(1, 0, 2)


def dft_left(f: QField, roots: RootPair) -> QField:
    """Direct (non-FFT) forward left qFT.

    Evaluated as two quaternion matrix products: the nu-kernel along axis 2
    first, then the mu-kernel along axis 1, so both exponentials multiply from
    the left with the mu factor outermost.
    """
    n1, n2 = f.shape
    h = _apply_axis1(exponential_matrix(n2, roots.nu, -1), f.data)
    out = _apply_axis0(exponential_matrix(n1, roots.mu, -1), h)
    return QField._wrap(out / math.sqrt(n1 * n2))


def idft_left(F: QField, roots: RootPair) -> QField:
    """Direct inverse left qFT (``exp(+nu) exp(+mu) F`` summed over frequencies)."""
    n1, n2 = F.shape
    h = _apply_axis0(exponential_matrix(n1, roots.mu, +1), F.data)
    out = _apply_axis1(exponential_matrix(n2, roots.nu, +1), h)
    return QField._wrap(out / math.sqrt(n1 * n2))


# -- fast path --------------------------------------------------------------

def _frame(r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unit vectors p, q with (r, p, q) a right-handed orthonormal frame."""
    e = np.zeros(3)
    e[int(np.argmin(np.abs(r)))] = 1.0
    p = np.cross(r, e)
    p /= np.linalg.norm(p)
    return p, np.cross(r, p)


def _axis_pass(arr: np.ndarray, root, axis: int, sign: int) -> np.ndarray:
    """Unitary 1-D transform ``n^-1/2 sum_x exp(sign root 2pi x u/n) h(x)`` along ``axis``.

    ``h`` splits into the part commuting with the root, ``alpha + beta root``,
    and the anticommuting part ``p (gamma + delta root)``. Both brackets live
    in the complex plane spanned by {1, root}. The exponential multiplies the
    commuting part directly and reaches the anticommuting bracket with its
    sign flipped, so that bracket takes the conjugate-frequency FFT.
    """
    r = np.array([root.x, root.y, root.z], dtype=np.float64)
    p, q = _frame(r)
    scalar = arr[..., 0]
    vec = arr[..., 1:]
    beta = vec @ r
    anti = vec - beta[..., None] * r
    gamma = anti @ p
    delta = -(anti @ q)

    z_comm = scalar + 1j * beta
    z_anti = gamma + 1j * delta
    if sign < 0:
        z_comm = np.fft.fft(z_comm, axis=axis, norm="ortho")
        z_anti = np.fft.ifft(z_anti, axis=axis, norm="ortho")
    else:
        z_comm = np.fft.ifft(z_comm, axis=axis, norm="ortho")
        z_anti = np.fft.fft(z_anti, axis=axis, norm="ortho")

    out = np.empty_like(arr)
    out[..., 0] = z_comm.real
    out[..., 1:] = (z_comm.imag[..., None] * r
                    + z_anti.real[..., None] * p
                    - z_anti.imag[..., None] * q)
    return out


def fast_qft(f: QField, roots: RootPair, direction: str = FORWARD) -> QField:
    """FFT-based left qFT for power-of-two grids.

    Other grid sizes fall back to :func:`dft_left` / :func:`idft_left`.
    """
    if direction not in (FORWARD, INVERSE):
        raise ValueError(f"direction must be {FORWARD!r} or {INVERSE!r}")
    n1, n2 = f.shape
    if not (is_power_of_two(n1) and is_power_of_two(n2)):
        return dft_left(f, roots) if direction == FORWARD else idft_left(f, roots)
    if direction == FORWARD:
        h = _axis_pass(f.data, roots.nu, axis=1, sign=-1)
        out = _axis_pass(h, roots.mu, axis=0, sign=-1)
    else:
        h = _axis_pass(f.data, roots.mu, axis=0, sign=+1)
        out = _axis_pass(h, roots.nu, axis=1, sign=+1)
    return QField._wrap(out)


def qft(f: QField, roots: RootPair, *, inverse: bool = False, fast: bool = True) -> QField:
    """Transform dispatcher used by the convolution code."""
    if fast:
        return fast_qft(f, roots, INVERSE if inverse else FORWARD)
    return idft_left(f, roots) if inverse else dft_left(f, roots)


def change_of_signs(roots: RootPair, phi) -> RootPair:
    """Roots ``((-1)^phi1 mu, (-1)^phi2 nu)``."""
    phi = as_reflection(phi)
    mu = -roots.mu if phi.phi1 else roots.mu
    nu = -roots.nu if phi.phi2 else roots.nu
    return RootPair(mu, nu)
