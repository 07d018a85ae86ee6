"""Independent reference implementations used by the tests.

Everything here is written directly from the defining sums with plain Python
loops (and exact rational arithmetic for box counting), sharing no code with
the package.
"""
from __future__ import annotations

import math
from fractions import Fraction


def power_variation(x, p, l):
    n = len(x) - 1
    total = sum(abs(x[i] - x[i - l]) ** p for i in range(l, n + 1))
    return total / (2.0 * (n - l))


def power_variation_second_diff(x, p, l):
    n = len(x) - 1
    total = sum(abs(x[i + l] - 2 * x[i] + x[i - l]) ** p for i in range(l, n - l + 1))
    return total / (2.0 * (n - 2 * l))


def hallwood_A(x, l, j=0):
    n = len(x) - 1
    m = (n - j) // l
    return (l / n) * sum(abs(x[i * l + j] - x[i * l + j - l]) for i in range(1, m + 1))


def ols_slope(s, y):
    sb = sum(s) / len(s)
    yb = sum(y) / len(y)
    return sum((a - sb) * (b - yb) for a, b in zip(s, y)) / sum((a - sb) ** 2 for a in s)


def variation_fd(x, p, L=2):
    n = len(x) - 1
    s = [math.log(l / n) for l in range(1, L + 1)]
    y = [math.log(power_variation(x, p, l)) for l in range(1, L + 1)]
    return 2 - ols_slope(s, y) / p


def ramp_variation_fd(n, p):
    """Closed form of the variation estimator (L = 2) on the ramp ``X_i = i/n``.

    ``V_p(l/n) = (n - l + 1) (l/n)**p / (2 (n - l))``, so the estimate is
    ``1 - log2((n-1)**2 / (n (n-2))) / p``.
    """
    return 1.0 - math.log2((n - 1) ** 2 / (n * (n - 2))) / p


# --- box counting with exact arithmetic ------------------------------------

def _clip(a, b):
    """Intersection of intervals ``(lo, lo_closed, hi, hi_closed)``, or None if empty."""
    if a[0] != b[0]:
        lo, loc = (a[0], a[1]) if a[0] > b[0] else (b[0], b[1])
    else:
        lo, loc = a[0], a[1] and b[1]
    if a[2] != b[2]:
        hi, hic = (a[2], a[3]) if a[2] < b[2] else (b[2], b[3])
    else:
        hi, hic = a[2], a[3] and b[3]
    if lo < hi or (lo == hi and loc and hic):
        return lo, loc, hi, hic
    return None


def _intersects(a, b):
    return _clip(a, b) is not None


def box_count_exact(x, M):
    """Half-open boxes (last row/column closed) of an ``M x M`` tiling hit by the interpolant."""
    xs = [Fraction(v) for v in x]
    n = len(xs) - 1
    lo, hi = min(xs), max(xs)
    y = [(v - lo) / (hi - lo) for v in xs]
    hit = set()
    for a in range(M):
        col = (Fraction(a, M), True, Fraction(a + 1, M), a == M - 1)
        for i in range(n):
            seg = (Fraction(i, n), True, Fraction(i + 1, n), True)
            part = _clip(seg, col)
            if part is None:
                continue
            t0, c0, t1, c1 = part

            def yy(t):
                return y[i] + (y[i + 1] - y[i]) * (t - Fraction(i, n)) * n
            if y[i + 1] > y[i]:
                img = (yy(t0), c0, yy(t1), c1)
            elif y[i + 1] < y[i]:
                img = (yy(t1), c1, yy(t0), c0)
            else:
                img = (y[i], True, y[i], True)
            for b in range(M):
                row = (Fraction(b, M), True, Fraction(b + 1, M), b == M - 1)
                if _intersects(img, row):
                    hit.add((a, b))
    return len(hit)


# --- 2-d all-pairs enumeration ----------------------------------------------

def _pairs(shape, k2):
    m1, m2 = shape
    pts = [(i, j) for i in range(m1) for j in range(m2)]
    for a in pts:
        for b in pts:
            if (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 == k2:
                yield a, b


def isotropic_variation(X, p, k2):
    vals = [abs(X[a] - X[b]) ** p for a, b in _pairs(X.shape, k2)]
    return sum(vals) / (2 * len(vals))


def filter_variation(X, p, k2):
    vals = []
    for a, b in _pairs(X.shape, k2):
        if (a[0] + b[0]) % 2 or (a[1] + b[1]) % 2:
            continue
        mid = ((a[0] + b[0]) // 2, (a[1] + b[1]) // 2)
        vals.append(abs(X[a] - 2 * X[mid] + X[b]) ** p)
    return sum(vals) / (2 * len(vals))


def square_increment_variation(X, p, k2):
    vals = []
    for a, b in _pairs(X.shape, k2):
        if a[0] == b[0] or a[1] == b[1]:
            continue
        vals.append(abs(X[a] - X[a[0], b[1]] - X[b[0], a[1]] + X[b]) ** p)
    return sum(vals) / (2 * len(vals))


# --- transforms by direct summation ----------------------------------------

def semi_B(x, omega):
    m = (len(x) - 1) // 2
    total = (x[0] + x[1]) / 2
    for i in range(1, 2 * m):
        total += x[i] * math.cos(omega * (i - m) / m)
    return total / m


def dct2_B(x, omega):
    m = (len(x) - 1) // 2
    total = sum(x[i] * math.cos(omega * (2 * i + 1) / (4 * m)) for i in range(2 * m + 1))
    return math.sqrt(2 / (2 * m + 1)) * total
