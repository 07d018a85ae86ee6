"""Shared data types and the log-log regression used by every estimator."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DegenerateRegression, InvalidInput


def _frozen_array(values, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=float, copy=True)
    if arr.ndim != ndim:
        raise InvalidInput(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput("data contain NaN or infinite values")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Series:
    """Equally spaced samples ``X_{i/n}``, ``i = 0..n``, on the unit interval."""

    values: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.values, 1)
        if arr.size < 2:
            raise InvalidInput("a series needs at least 2 samples")
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return self.values.size - 1

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True, eq=False)
class Grid:
    """Lattice samples ``X[i1, i2]`` at ``(i1/n1, i2/n2)`` on the unit square.

    Grids as small as 2 x 2 are accepted so that variations can be checked by
    hand; the estimators themselves need larger grids and say so.
    """

    values: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.values, 2)
        if min(arr.shape) < 2:
            raise InvalidInput("a grid needs at least 2 samples along each axis")
        object.__setattr__(self, "values", arr)

    @property
    def n1(self) -> int:
        return self.values.shape[0] - 1

    @property
    def n2(self) -> int:
        return self.values.shape[1] - 1

    @property
    def n(self) -> int:
        # lattice spacing used for log(k/n); only the intercept depends on it
        return max(self.n1, self.n2)

    @property
    def shape(self):
        return self.values.shape


def as_series(data) -> Series:
    return data if isinstance(data, Series) else Series(data)


def as_grid(data) -> Grid:
    return data if isinstance(data, Grid) else Grid(data)


class LogLogPoint(NamedTuple):
    s: float
    y: float


@dataclass(frozen=True, eq=False)
class FitResult:
    slope: float
    intercept: float
    s: np.ndarray
    y: np.ndarray
    weights: np.ndarray | None = None

    @property
    def points(self) -> list[LogLogPoint]:
        return [LogLogPoint(float(a), float(b)) for a, b in zip(self.s, self.y)]

    def residuals(self) -> np.ndarray:
        return self.y - (self.intercept + self.slope * self.s)


@dataclass(frozen=True, eq=False)
class Estimate:
    """A dimension estimate together with the regression that produced it.

    ``fd`` is never clamped to the admissible range; out-of-range values are
    reported in ``warnings`` instead. ``excluded_s``/``excluded_y`` hold log-log
    points that were computed but left out of the fit (used for plotting).
    """

    fd: float
    method: str
    fit: FitResult
    p: float | None = None
    warnings: tuple[str, ...] = ()
    excluded_s: np.ndarray = field(default_factory=lambda: np.empty(0))
    excluded_y: np.ndarray = field(default_factory=lambda: np.empty(0))

    @property
    def scale(self) -> float:
        return float(np.exp(self.fit.intercept))

    @property
    def slope(self) -> float:
        return self.fit.slope


def fit_line(s, y, weights=None) -> FitResult:
    """(Weighted) least squares line ``y = intercept + slope * s``."""
    s = np.asarray(s, dtype=float)
    y = np.asarray(y, dtype=float)
    if s.shape != y.shape or s.ndim != 1:
        raise InvalidInput("s and y must be 1-d arrays of equal length")
    if s.size < 2:
        raise DegenerateRegression("need at least 2 points for a log-log fit")
    if not (np.all(np.isfinite(s)) and np.all(np.isfinite(y))):
        raise InvalidInput("log-log points must be finite")
    if np.unique(s).size < 2:
        raise DegenerateRegression("need at least 2 distinct scales for a log-log fit")
    if weights is None:
        w = np.ones_like(s)
    else:
        w = np.asarray(weights, dtype=float)
        if w.shape != s.shape or np.any(w <= 0) or not np.all(np.isfinite(w)):
            raise InvalidInput("weights must be positive and finite")
    sbar = np.sum(w * s) / np.sum(w)
    ybar = np.sum(w * y) / np.sum(w)
    ds = s - sbar
    sxx = np.sum(w * ds * ds)
    if not (np.isfinite(sxx) and sxx > 0):
        raise DegenerateRegression("scales are too close together for a log-log fit")
    slope = np.sum(w * ds * (y - ybar)) / sxx
    intercept = ybar - slope * sbar
    return FitResult(float(slope), float(intercept), s.copy(), y.copy(),
                     None if weights is None else w.copy())


def loglog_fit(points: Iterable[Sequence[float]]) -> FitResult:
    """Ordinary least squares fit through a list of ``(s, y)`` log-log points."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise DegenerateRegression("no points")
    s, y = zip(*pts)
    return fit_line(s, y)


def range_warnings(fd: float, topo_dim: int) -> tuple[str, ...]:
    lo, hi = topo_dim, topo_dim + 1
    if fd < lo or fd > hi:
        return (f"estimate {fd:.6g} outside the admissible range [{lo}, {hi}]",)
    return ()
