"""Fractal dimension estimators for lattice data on the unit square.

Pairs of lattice points at Euclidean index distance ``k`` form the set
``S(k)``. Each unordered pair is enumerated once through a canonical offset
``(d1, d2)``; averaging over ordered pairs gives the same value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Estimate, as_grid, fit_line, range_warnings
from .errors import (AllTransectsDegenerate, DegenerateGrid, InvalidParameters,
                     NoPairs)
from .variation import VariationConfig

ISOTROPIC_K2 = (1, 2, 4)        # k = 1, sqrt 2, 2
FILTER_K2 = (4, 8, 16)          # k = 2, 2 sqrt 2, 4
SQUARE_INCREMENT_K2 = (2, 8)    # k = sqrt 2, 2 sqrt 2


def _k_squared(k: float) -> int:
    k2 = float(k) ** 2
    r = int(round(k2))
    if r < 1 or abs(k2 - r) > 1e-9 * max(1.0, k2):
        raise InvalidParameters(f"distance {k} is not a lattice distance")
    return r


def lattice_offsets(k2: int) -> list[tuple[int, int]]:
    """Offsets ``(d1, d2)`` with ``d1**2 + d2**2 = k2``, one per sign pair."""
    out = []
    r = math.isqrt(k2)
    for d1 in range(0, r + 1):
        rest = k2 - d1 * d1
        d2 = math.isqrt(rest)
        if d2 * d2 != rest:
            continue
        for e2 in {d2, -d2}:
            if d1 > 0 or e2 > 0:
                out.append((d1, e2))
    return sorted(out)


@dataclass(frozen=True)
class RelevantDistanceSet:
    k_squared: tuple[int, ...]
    offsets: tuple[tuple[tuple[int, int], ...], ...]
    pair_counts: tuple[int, ...]   # N(k): ordered pairs

    @property
    def distances(self) -> np.ndarray:
        return np.sqrt(np.asarray(self.k_squared, dtype=float))


def relevant_distances(shape, k_squared) -> RelevantDistanceSet:
    """Offsets and ordered-pair counts ``N(k)`` for each ``k**2`` on a lattice of ``shape``.

    Raises :class:`NoPairs` if some distance is realized by fewer than 2 ordered pairs.
    """
    m1, m2 = shape
    offs, counts = [], []
    for k2 in k_squared:
        o = tuple(lattice_offsets(int(k2)))
        N = 2 * sum(max(m1 - abs(a), 0) * max(m2 - abs(b), 0) for a, b in o)
        if N <= 1:
            raise NoPairs(f"no pairs at distance sqrt({k2}) on a {m1}x{m2} grid")
        offs.append(o)
        counts.append(N)
    return RelevantDistanceSet(tuple(int(k) for k in k_squared), tuple(offs), tuple(counts))


def _shifted(X: np.ndarray, offsets) -> list[np.ndarray]:
    """Views ``X[i + o]`` for each offset ``o`` over all ``i`` keeping every point in range."""
    m1, m2 = X.shape
    lo1 = max(0, -min(o[0] for o in offsets))
    hi1 = m1 - max(0, max(o[0] for o in offsets))
    lo2 = max(0, -min(o[1] for o in offsets))
    hi2 = m2 - max(0, max(o[1] for o in offsets))
    if hi1 <= lo1 or hi2 <= lo2:  # offset longer than the grid
        return [X[:0, :0]] * len(offsets)
    return [X[lo1 + a:hi1 + a, lo2 + b:hi2 + b] for a, b in offsets]


def _pair_average(X, k2, p, increment) -> float:
    total = 0.0
    count = 0
    for d in lattice_offsets(k2):
        vals = increment(X, d)
        total += float(np.sum(np.abs(vals) ** p))
        count += vals.size
    if count == 0:
        raise NoPairs(f"no pairs at distance sqrt({k2}) on a {X.shape[0]}x{X.shape[1]} grid")
    return total / (2.0 * count)


def _first_difference(X, d):
    a, b = _shifted(X, [(0, 0), d])
    return a - b


def _second_difference(X, d):
    if d[0] % 2 or d[1] % 2:
        raise InvalidParameters(f"offset {d} has no lattice midpoint")
    a, m, b = _shifted(X, [(0, 0), (d[0] // 2, d[1] // 2), d])
    return a - 2.0 * m + b


def _square_increment(X, d):
    a, c1, c2, b = _shifted(X, [(0, 0), (0, d[1]), (d[0], 0), d])
    return a - c1 - c2 + b


def isotropic_variation(grid, p: float, k: float) -> float:
    """``1/(2 N(k)) * sum_{S(k)} |X_i - X_j|**p``."""
    return _pair_average(as_grid(grid).values, _k_squared(k), p, _first_difference)


def filter_variation(grid, p: float, k: float) -> float:
    """``1/(2 N(k)) * sum_{S(k)} |X_i - 2 X_mid + X_j|**p`` (second differences)."""
    return _pair_average(as_grid(grid).values, _k_squared(k), p, _second_difference)


def square_increment_variation(grid, p: float, k: float) -> float:
    """``1/(2 N(k)) * sum_{S(k)} |X_{i1,i2} - X_{i1,j2} - X_{j1,i2} + X_{j1,j2}|**p``."""
    return _pair_average(as_grid(grid).values, _k_squared(k), p, _square_increment)


def _surface_estimate(grid, p, k2s, variation, method) -> Estimate:
    grid = as_grid(grid)
    if not p > 0:
        raise InvalidParameters(f"power index must be positive, got {p}")
    ks = np.sqrt(np.asarray(k2s, dtype=float))
    values = np.array([variation(grid, p, k) for k in ks])
    if np.any(values <= 0):
        raise DegenerateGrid(f"{method}: zero variation at k = {ks[values <= 0].tolist()}")
    fit = fit_line(np.log(ks / grid.n), np.log(values))
    fd = 3.0 - fit.slope / p
    return Estimate(fd, method, fit, p=float(p), warnings=range_warnings(fd, 2))


def isotropic_estimate(grid, p: float = 1.0) -> Estimate:
    return _surface_estimate(grid, p, ISOTROPIC_K2, isotropic_variation, "isotropic")


def filter_estimate(grid, p: float = 1.0) -> Estimate:
    return _surface_estimate(grid, p, FILTER_K2, filter_variation, "filter")


def square_increment_estimate(grid, p: float = 1.0) -> Estimate:
    return _surface_estimate(grid, p, SQUARE_INCREMENT_K2, square_increment_variation,
                             "squareincr")


@dataclass(frozen=True)
class TransectConfig:
    p: float = 1.0
    diff_order: int = 1
    min_valid_transects: int = 1
    L: int = 2

    def __post_init__(self):
        VariationConfig(self.p, self.L, self.diff_order)
        if self.min_valid_transects < 1:
            raise InvalidParameters("min_valid_transects must be >= 1")

    @property
    def method(self) -> str:
        return "transect.var" if self.diff_order == 1 else "transect.incr"


def transect_variations(rows: np.ndarray, p: float, L: int = 2, diff_order: int = 1):
    """Power variations at lags ``1..L`` for every row of ``rows`` (shape ``(m, L)``)."""
    n = rows.shape[1] - 1
    out = np.empty((rows.shape[0], L))
    for l in range(1, L + 1):
        if diff_order == 1:
            incr = rows[:, l:] - rows[:, :-l]
            denom = 2.0 * (n - l)
        else:
            incr = rows[:, 2 * l:] - 2.0 * rows[:, l:-l] + rows[:, :-2 * l]
            denom = 2.0 * (n - 2 * l)
        out[:, l - 1] = np.sum(np.abs(incr) ** p, axis=1) / denom
    return out


def transect_fds(grid, cfg: TransectConfig) -> np.ndarray:
    """Line transect dimension estimates for every row then every column (NaN if degenerate)."""
    X = as_grid(grid).values
    fds = []
    for rows in (X, X.T):
        n = rows.shape[1] - 1
        if cfg.L * cfg.diff_order >= n:
            fds.append(np.full(rows.shape[0], np.nan))
            continue
        V = transect_variations(rows, cfg.p, cfg.L, cfg.diff_order)
        ok = np.all(V > 0, axis=1)
        s = np.log(np.arange(1, cfg.L + 1) / n)
        ds = s - s.mean()
        with np.errstate(divide="ignore", invalid="ignore"):
            logv = np.log(np.where(ok[:, None], V, 1.0))
        slope = (logv - logv.mean(axis=1, keepdims=True)) @ ds / np.sum(ds * ds)
        fds.append(np.where(ok, 2.0 - slope / cfg.p, np.nan))
    return np.concatenate(fds)


def transect_estimate(grid, cfg: TransectConfig | None = None, **kwargs) -> Estimate:
    """One plus the median of the row and column variation estimates.

    Degenerate transects (constant rows, say) are skipped and counted in the
    warnings. The attached fit is the log-log fit of the transect whose
    estimate is closest to the median.
    """
    cfg = TransectConfig(**kwargs) if cfg is None else cfg
    grid = as_grid(grid)
    fds = transect_fds(grid, cfg)
    valid = np.isfinite(fds)
    nvalid = int(valid.sum())
    if nvalid < cfg.min_valid_transects or nvalid == 0:
        raise AllTransectsDegenerate(
            f"{cfg.method}: only {nvalid} valid transect(s), need {cfg.min_valid_transects}")
    med = float(np.median(fds[valid]))
    fd = 1.0 + med
    X = grid.values
    lines = list(X) + list(X.T)
    closest = int(np.nanargmin(np.abs(fds - med)))
    row = lines[closest]
    n = row.size - 1
    V = transect_variations(row[None, :], cfg.p, cfg.L, cfg.diff_order)[0]
    fit = fit_line(np.log(np.arange(1, cfg.L + 1) / n), np.log(V))
    warn = []
    if nvalid < fds.size:
        warn.append(f"{fds.size - nvalid} of {fds.size} transects degenerate and skipped")
    return Estimate(fd, cfg.method, fit, p=float(cfg.p),
                    warnings=tuple(warn) + range_warnings(fd, 2))
