# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Numerov stepping, node counting and Jacobi recurrence."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()

cdef double RESCALE_AT = 1e200
cdef double RESCALE_BY = 1e-200


def numerov(double[::1] q, double h, double y0, double y1, bint reverse=False):
    """Integrate y'' = q y with Numerov's scheme from one end of the grid.

    Returns the solution array; when |y| exceeds 1e200 the already computed
    part is scaled down so only ratios are meaningful.
    """
    cdef Py_ssize_t n = q.shape[0]
    cdef cnp.ndarray[double, ndim=1] out = np.zeros(n)
    cdef double[::1] y = out
    cdef double c = h * h / 12.0
    cdef Py_ssize_t i, j, k, step, start
    if n < 2:
        raise ValueError("need at least two grid points")
    if reverse:
        start = n - 1
        step = -1
    else:
        start = 0
        step = 1
    y[start] = y0
    y[start + step] = y1
    i = start + step
    for k in range(n - 2):
        y[i + step] = ((2.0 + 10.0 * c * q[i]) * y[i] - (1.0 - c * q[i - step]) * y[i - step]) \
            / (1.0 - c * q[i + step])
        if fabs(y[i + step]) > RESCALE_AT:
            j = start
            while j != i + 2 * step:
                y[j] *= RESCALE_BY
                j += step
        i += step
    return out


def count_sign_changes(double[::1] y, Py_ssize_t lo, Py_ssize_t hi):
    """Number of strict sign changes of y[lo:hi], skipping exact zeros."""
    cdef Py_ssize_t i
    cdef int count = 0
    cdef double last = 0.0
    for i in range(lo, hi):
        if y[i] != 0.0:
            if last != 0.0 and (y[i] > 0.0) != (last > 0.0):
                count += 1
            last = y[i]
    return count


def jacobi(int n, double a, double b, double[::1] x):
    """P_n^{(a,b)}(x) by the three-term recurrence in the degree."""
    cdef Py_ssize_t m = x.shape[0], i
    cdef cnp.ndarray[double, ndim=1] out = np.empty(m)
    cdef double[::1] o = out
    cdef double p0, p1, p2, k2, a1, a2, a3, a4
    cdef int k
    for i in range(m):
        p0 = 1.0
        if n == 0:
            o[i] = p0
            continue
        p1 = (a + 1.0) + (a + b + 2.0) * (x[i] - 1.0) / 2.0
        for k in range(2, n + 1):
            k2 = 2.0 * k + a + b
            a1 = 2.0 * k * (k + a + b) * (k2 - 2.0)
            a2 = (k2 - 1.0) * (a * a - b * b)
            a3 = (k2 - 2.0) * (k2 - 1.0) * k2
            a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * k2
            p2 = ((a2 + a3 * x[i]) * p1 - a4 * p0) / a1
            p0 = p1
            p1 = p2
        o[i] = p1
    return out
