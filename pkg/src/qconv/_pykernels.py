"""Pure numpy implementations of the hot kernels.

Same signatures and summation order as the compiled ``_ckernels`` module; used
when the extension is not built or ``QCONV_BACKEND=python`` is set.
``num_threads`` is accepted for signature compatibility and ignored.
"""
import numpy as np

from .quaternion import qmul_array

NAME = "python"


def cyclic_convolve(f, g, num_threads=1):
    """out(x) = sum_y f(y) g(x - y), indices mod the grid size."""
    f = np.ascontiguousarray(f, dtype=np.float64)
    g = np.ascontiguousarray(g, dtype=np.float64)
    n1, n2, _ = f.shape
    out = np.zeros_like(f)
    for y1 in range(n1):
        g_row = np.roll(g, y1, axis=0)
        for y2 in range(n2):
            out += qmul_array(f[y1, y2], np.roll(g_row, y2, axis=1))
    return out


def cyclic_correlate(f, g, num_threads=1):
    """out(y) = sum_x f(x) g(x + y), indices mod the grid size."""
    f = np.ascontiguousarray(f, dtype=np.float64)
    g = np.ascontiguousarray(g, dtype=np.float64)
    n1, n2, _ = f.shape
    out = np.zeros_like(f)
    for x1 in range(n1):
        g_row = np.roll(g, -x1, axis=0)
        for x2 in range(n2):
            out += qmul_array(f[x1, x2], np.roll(g_row, -x2, axis=1))
    return out


def qmatmul_left(e, h, num_threads=1):
    """out[u, k] = sum_x e[u, x] h[x, k] with quaternion entries.

    ``e`` has shape (m, n, 4), ``h`` has shape (n, k, 4).
    """
    e = np.ascontiguousarray(e, dtype=np.float64)
    h = np.ascontiguousarray(h, dtype=np.float64)
    m, n, _ = e.shape
    out = np.zeros((m, h.shape[1], 4))
    for x in range(n):
        out += qmul_array(e[:, x, None, :], h[None, x, :, :])
    return out
