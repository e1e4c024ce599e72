"""Pure-Python versions of the compiled kernels (same signatures and results)."""

import numpy as np

RESCALE_AT = 1e200
RESCALE_BY = 1e-200


def numerov(q, h, y0, y1, reverse=False):
    q = [float(v) for v in q]
    n = len(q)
    if n < 2:
        raise ValueError("need at least two grid points")
    if reverse:
        q = q[::-1]
    c = h * h / 12.0
    y = [0.0] * n
    y[0], y[1] = float(y0), float(y1)
    for i in range(1, n - 1):
        nxt = ((2.0 + 10.0 * c * q[i]) * y[i] - (1.0 - c * q[i - 1]) * y[i - 1]) / (1.0 - c * q[i + 1])
        y[i + 1] = nxt
        if abs(nxt) > RESCALE_AT:
            for j in range(i + 2):
                y[j] *= RESCALE_BY
    out = np.array(y)
    return out[::-1].copy() if reverse else out


def count_sign_changes(y, lo, hi):
    count = 0
    last = 0.0
    for v in y[lo:hi]:
        if v != 0.0:
            if last != 0.0 and (v > 0.0) != (last > 0.0):
                count += 1
            last = v
    return count


def jacobi(n, a, b, x):
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        k2 = 2.0 * k + a + b
        a1 = 2.0 * k * (k + a + b) * (k2 - 2.0)
        a2 = (k2 - 1.0) * (a * a - b * b)
        a3 = (k2 - 2.0) * (k2 - 1.0) * k2
        a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * k2
        p0, p1 = p1, ((a2 + a3 * x) * p1 - a4 * p0) / a1
    return p1
