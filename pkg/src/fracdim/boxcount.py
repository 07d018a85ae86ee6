"""Box-count estimation on the linearly interpolated data graph."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Estimate, as_series, fit_line, range_warnings
from .errors import DegenerateSeries, InsufficientScales, InvalidParameters


@dataclass(frozen=True, eq=False)
class BoxCountTable:
    scales: np.ndarray  # eps_k = 2**(k - K), k = 0..K
    counts: np.ndarray
    K: int


# products within this distance of an integer are treated as lying on a box edge
_EDGE_TOL = 1e-9


def _snap(v: np.ndarray) -> np.ndarray:
    r = np.round(v)
    return np.where(np.abs(v - r) <= _EDGE_TOL, r, v)


def _count_level(y: np.ndarray, M: int) -> int:
    """Boxes of an ``M x M`` tiling of the unit square hit by the interpolant.

    Boxes are half-open ``[a, b) x [c, d)``; the last row and column are
    closed so that the top and right edges of the bounding box are covered.
    """
    n = y.size - 1
    if M == 1:
        return 1
    idx = np.arange(n + 1)
    col = np.minimum((idx * M) // n, M - 1)
    bvals = np.interp(np.arange(1, M) * n / M, idx, y)
    left = np.concatenate(([y[0]], bvals))
    right = np.concatenate((bvals, [y[-1]]))
    hi = left.copy()
    lo = np.minimum(left, right)
    np.maximum.at(hi, col, y)
    np.minimum.at(lo, col, y)
    # the value at the open right edge is a supremum that is never attained
    sup_open = right > hi
    bottom = np.clip(np.floor(_snap(lo * M)), 0, M - 1)
    top = np.where(sup_open, np.ceil(_snap(right * M)) - 1, np.floor(_snap(hi * M)))
    top = np.clip(top, bottom, M - 1)
    return int(np.sum(top - bottom + 1))


def box_counts(series) -> BoxCountTable:
    """Count boxes of width ``2**(k-K)`` and height ``u * 2**(k-K)`` covering the graph.

    ``K = ceil(log2 n)`` and ``u`` is the range of the data.
    """
    x = as_series(series).values
    n = x.size - 1
    u = float(x.max() - x.min())
    if u == 0.0:
        raise DegenerateSeries("box-count needs a non-constant series")
    y = (x - x.min()) / u
    K = (n - 1).bit_length()
    counts = np.array([_count_level(y, 2 ** (K - k)) for k in range(K + 1)])
    scales = 2.0 ** (np.arange(K + 1) - K)
    return BoxCountTable(scales, counts, K)


def boxcount_estimate(series, mode: str = "standard") -> Estimate:
    """Box-count dimension, ``-slope`` of ``log N(eps)`` on ``log eps``.

    ``mode="naive"`` regresses over every dyadic scale. ``mode="standard"``
    drops the scales with ``N(eps) > n/5`` and the two largest scales.
    """
    series = as_series(series)
    table = box_counts(series)
    s = np.log(table.scales)
    y = np.log(table.counts.astype(float))
    if mode == "naive":
        used = np.ones(s.size, dtype=bool)
        method = "boxcount.naive"
    elif mode == "standard":
        used = table.counts <= series.n / 5
        used[-2:] = False
        method = "boxcount"
    else:
        raise InvalidParameters(f"unknown box-count mode {mode!r}")
    if used.sum() < 2:
        raise InsufficientScales(
            f"{method}: only {int(used.sum())} scale(s) left after exclusions (n = {series.n})")
    fit = fit_line(s[used], y[used])
    fd = -fit.slope
    return Estimate(fd, method, fit, warnings=range_warnings(fd, 1),
                    excluded_s=s[~used], excluded_y=y[~used])
