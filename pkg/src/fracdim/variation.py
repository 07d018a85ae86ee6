"""Power variation estimators (variogram, madogram, rodogram) and Hall-Wood."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Estimate, as_series, fit_line, range_warnings
from .errors import DegenerateSeries, InvalidParameters, LagOutOfRange

NAMED_POWERS = {2.0: "variogram", 1.0: "madogram", 0.5: "rodogram"}


def variation_method_name(p: float, diff_order: int = 1) -> str:
    name = NAMED_POWERS.get(float(p), f"variation:p={p:g}")
    if diff_order == 2:
        name += ":diff=2"
    return name


@dataclass(frozen=True)
class VariationConfig:
    p: float = 1.0
    L: int = 2
    diff_order: int = 1

    def __post_init__(self):
        if not (self.p > 0 and np.isfinite(self.p)):
            raise InvalidParameters(f"power index must be positive, got {self.p}")
        if int(self.L) != self.L or self.L < 2:
            raise InvalidParameters(f"L must be an integer >= 2, got {self.L}")
        if self.diff_order not in (1, 2):
            raise InvalidParameters(f"diff_order must be 1 or 2, got {self.diff_order}")

    def check_length(self, n: int) -> None:
        if self.L * self.diff_order >= n:
            raise LagOutOfRange(
                f"L * diff_order = {self.L * self.diff_order} must be below n = {n}")

    @property
    def method(self) -> str:
        return variation_method_name(self.p, self.diff_order)


def power_variation(series, p: float, l: int) -> float:
    """Power variation of order ``p`` at lag ``l/n``.

    ``V_p(l/n) = 1/(2(n-l)) * sum_{i=l..n} |X_{i/n} - X_{(i-l)/n}|**p``
    """
    x = as_series(series).values
    n = x.size - 1
    if not 1 <= l < n:
        raise LagOutOfRange(f"lag {l} outside [1, {n - 1}]")
    incr = np.abs(x[l:] - x[:-l])
    return float(np.sum(incr ** p) / (2.0 * (n - l)))


def power_variation_second_diff(series, p: float, l: int) -> float:
    """Power variation of second differences at lag ``l/n``.

    ``1/(2(n-2l)) * sum_{i=l..n-l} |X_{(i+l)/n} - 2 X_{i/n} + X_{(i-l)/n}|**p``
    """
    x = as_series(series).values
    n = x.size - 1
    if l < 1 or 2 * l >= n:
        raise LagOutOfRange(f"lag {l} needs 1 <= l and 2l < n = {n}")
    incr = np.abs(x[2 * l:] - 2.0 * x[l:-l] + x[:-2 * l])
    return float(np.sum(incr ** p) / (2.0 * (n - 2 * l)))


def _log_fit(stats, lags, n, method):
    stats = np.asarray(stats, dtype=float)
    if np.any(stats <= 0):
        bad = [int(l) for l, v in zip(lags, stats) if v <= 0]
        raise DegenerateSeries(
            f"{method}: zero statistic at lag(s) {bad}; constant or periodic input?")
    return fit_line(np.log(np.asarray(lags, dtype=float) / n), np.log(stats))


def variation_estimate(series, p: float = 1.0, L: int = 2, diff_order: int = 1) -> Estimate:
    """Variation estimator of fractal dimension, ``2 - slope/p``.

    ``p = 2`` gives the variogram estimator, ``p = 1`` the madogram and
    ``p = 0.5`` the rodogram. Values of ``L`` above 2 increase the bias.
    """
    series = as_series(series)
    cfg = VariationConfig(p, L, diff_order)
    cfg.check_length(series.n)
    lags = np.arange(1, cfg.L + 1)
    stat = power_variation if diff_order == 1 else power_variation_second_diff
    values = [stat(series, p, int(l)) for l in lags]
    fit = _log_fit(values, lags, series.n, cfg.method)
    fd = 2.0 - fit.slope / p
    return Estimate(fd, cfg.method, fit, p=float(p), warnings=range_warnings(fd, 1))


def madogram(series, L: int = 2) -> Estimate:
    return variation_estimate(series, 1.0, L)


def variogram(series, L: int = 2) -> Estimate:
    return variation_estimate(series, 2.0, L)


def rodogram(series, L: int = 2) -> Estimate:
    return variation_estimate(series, 0.5, L)


def hallwood_A(series, l: int, j: int = 0) -> float:
    """Hall-Wood area statistic ``A^{(j)}(l/n)`` on the lag-``l`` sub-grid offset by ``j``."""
    x = as_series(series).values
    n = x.size - 1
    if not 1 <= l <= n / 2:
        raise LagOutOfRange(f"lag {l} outside [1, n/2] for n = {n}")
    if not 0 <= j < l:
        raise LagOutOfRange(f"offset {j} outside [0, {l - 1}]")
    sub = x[j::l]
    return float(l / n * np.sum(np.abs(np.diff(sub))))


def hallwood_estimate(series, L: int = 2) -> Estimate:
    """Hall-Wood estimator ``2 - slope`` of ``log A(l/n)`` on ``log(l/n)``, ``l = 1..L``."""
    series = as_series(series)
    if int(L) != L or L < 2:
        raise InvalidParameters(f"L must be an integer >= 2, got {L}")
    if series.n < 2 * L:
        raise LagOutOfRange(f"Hall-Wood with L = {L} needs n >= {2 * L}, got {series.n}")
    lags = np.arange(1, L + 1)
    values = [hallwood_A(series, int(l)) for l in lags]
    fit = _log_fit(values, lags, series.n, "hallwood")
    fd = 2.0 - fit.slope
    return Estimate(fd, "hallwood", fit, warnings=range_warnings(fd, 1))
