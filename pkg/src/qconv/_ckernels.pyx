# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: cyclic quaternion convolution/correlation and the
quaternion matrix product behind the direct transform.

Each output sample is accumulated by exactly one thread in a fixed order, so
results are bit-identical for any thread count.
"""
import numpy as np
from cython.parallel cimport prange

NAME = "cython"


cdef inline void _qmac(const double *p, const double *q, double *acc) noexcept nogil:
    # acc += p * q (Hamilton product), same expression order as qmul_array
    cdef double a1 = p[0], b1 = p[1], c1 = p[2], d1 = p[3]
    cdef double a2 = q[0], b2 = q[1], c2 = q[2], d2 = q[3]
    acc[0] = acc[0] + (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2)
    acc[1] = acc[1] + (a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2)
    acc[2] = acc[2] + (a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2)
    acc[3] = acc[3] + (a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def cyclic_convolve(f, g, int num_threads=1):
    """out(x) = sum_y f(y) g(x - y), indices mod the grid size."""
    cdef const double[:, :, ::1] fv = np.ascontiguousarray(f, dtype=np.float64)
    cdef const double[:, :, ::1] gv = np.ascontiguousarray(g, dtype=np.float64)
    cdef Py_ssize_t n1 = fv.shape[0], n2 = fv.shape[1]
    out = np.zeros((n1, n2, 4))
    cdef double[:, :, ::1] ov = out
    cdef Py_ssize_t x, x1, x2, y1, y2, d1, d2
    if num_threads < 1:
        num_threads = 1
    for x in prange(n1 * n2, nogil=True, num_threads=num_threads, schedule="static"):
        x1 = x // n2
        x2 = x % n2
        for y1 in range(n1):
            d1 = x1 - y1
            if d1 < 0:
                d1 = d1 + n1
            for y2 in range(n2):
                d2 = x2 - y2
                if d2 < 0:
                    d2 = d2 + n2
                _qmac(&fv[y1, y2, 0], &gv[d1, d2, 0], &ov[x1, x2, 0])
    return out


def cyclic_correlate(f, g, int num_threads=1):
    """out(y) = sum_x f(x) g(x + y), indices mod the grid size."""
    cdef const double[:, :, ::1] fv = np.ascontiguousarray(f, dtype=np.float64)
    cdef const double[:, :, ::1] gv = np.ascontiguousarray(g, dtype=np.float64)
    cdef Py_ssize_t n1 = fv.shape[0], n2 = fv.shape[1]
    out = np.zeros((n1, n2, 4))
    cdef double[:, :, ::1] ov = out
    cdef Py_ssize_t y, y1, y2, x1, x2, s1, s2
    if num_threads < 1:
        num_threads = 1
    for y in prange(n1 * n2, nogil=True, num_threads=num_threads, schedule="static"):
        y1 = y // n2
        y2 = y % n2
        for x1 in range(n1):
            s1 = x1 + y1
            if s1 >= n1:
                s1 = s1 - n1
            for x2 in range(n2):
                s2 = x2 + y2
                if s2 >= n2:
                    s2 = s2 - n2
                _qmac(&fv[x1, x2, 0], &gv[s1, s2, 0], &ov[y1, y2, 0])
    return out


def qmatmul_left(e, h, int num_threads=1):
    """out[u, k] = sum_x e[u, x] h[x, k] with quaternion entries.

    ``e`` has shape (m, n, 4), ``h`` has shape (n, k, 4).
    """
    cdef const double[:, :, ::1] ev = np.ascontiguousarray(e, dtype=np.float64)
    cdef const double[:, :, ::1] hv = np.ascontiguousarray(h, dtype=np.float64)
    cdef Py_ssize_t m = ev.shape[0], n = ev.shape[1], kk = hv.shape[1]
    if hv.shape[0] != n:
        raise ValueError("inner dimensions differ")
    out = np.zeros((m, kk, 4))
    cdef double[:, :, ::1] ov = out
    cdef Py_ssize_t t, u, k, x
    if num_threads < 1:
        num_threads = 1
    for t in prange(m * kk, nogil=True, num_threads=num_threads, schedule="static"):
        u = t // kk
        k = t % kk
        for x in range(n):
            _qmac(&ev[u, x, 0], &hv[x, k, 0], &ov[u, k, 0])
    return out
