"""Test-only oracles built on the 2x2 complex matrix representation of H.

q = w + x i + y j + z k  ->  [[w + x I, y + z I], [-y + z I, w - x I]]

This shares no code with the package, so agreement is meaningful.
"""
import numpy as np


def to_mat(arr):
    arr = np.asarray(arr, dtype=float)
    w, x, y, z = (arr[..., k] for k in range(4))
    m = np.empty(arr.shape[:-1] + (2, 2), dtype=complex)
    m[..., 0, 0] = w + 1j * x
    m[..., 0, 1] = y + 1j * z
    m[..., 1, 0] = -y + 1j * z
    m[..., 1, 1] = w - 1j * x
    return m


def from_mat(m):
    out = np.empty(m.shape[:-2] + (4,))
    out[..., 0] = m[..., 0, 0].real
    out[..., 1] = m[..., 0, 0].imag
    out[..., 2] = m[..., 0, 1].real
    out[..., 3] = m[..., 0, 1].imag
    return out


def qmul(p, q):
    return from_mat(to_mat(p) @ to_mat(q))


def _kernel(root_vec, n, sign):
    """(n, n, 2, 2) matrices exp(sign * root * 2 pi x u / n), indexed [u, x]."""
    r = to_mat([0.0, *root_vec])
    u = np.arange(n)
    theta = sign * 2 * np.pi * np.outer(u, u) / n
    return (np.cos(theta)[..., None, None] * np.eye(2)
            + np.sin(theta)[..., None, None] * r)


def qft(f, mu, nu, inverse=False):
    """Left qFT of an (n1, n2, 4) array with unit-pure roots given as 3-vectors."""
    n1, n2 = f.shape[:2]
    sign = 1.0 if inverse else -1.0
    e1 = _kernel(mu, n1, sign)
    e2 = _kernel(nu, n2, sign)
    fm = to_mat(f)
    if inverse:
        # e^{nu} e^{mu} f
        k = np.einsum("bjpq,aiqr->abijpr", e2, e1)
    else:
        k = np.einsum("aipq,bjqr->abijpr", e1, e2)
    out = np.einsum("abijpr,ijrs->abps", k, fm)
    return from_mat(out) / np.sqrt(n1 * n2)


def convolve(f, g):
    n1, n2 = f.shape[:2]
    fm, gm = to_mat(f), to_mat(g)
    out = np.zeros((n1, n2, 2, 2), dtype=complex)
    for y1 in range(n1):
        for y2 in range(n2):
            out += fm[y1, y2] @ np.roll(gm, (y1, y2), axis=(0, 1))
    return from_mat(out)


def correlate(f, g):
    n1, n2 = f.shape[:2]
    fm, gm = to_mat(f), to_mat(g)
    out = np.zeros((n1, n2, 2, 2), dtype=complex)
    for x1 in range(n1):
        for x2 in range(n2):
            out += fm[x1, x2] @ np.roll(gm, (-x1, -x2), axis=(0, 1))
    return from_mat(out)
