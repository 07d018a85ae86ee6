"""Frequency-domain and wavelet estimators.

The semi-periodogram and DCT-II estimators regress the log periodogram on
log frequency and report ``5/2 + slope/2``. The wavelet estimator uses MODWT
wavelet variances on a reflected series and a weighted regression.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.fft
from scipy.special import polygamma

from .core import Estimate, as_series, fit_line, range_warnings
from .errors import DegenerateSeries, InvalidParameters, SeriesTooShort

# relative size below which a transform coefficient counts as exactly zero
_ZERO_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Periodogram:
    frequencies: np.ndarray
    values: np.ndarray
    kind: str
    m: int
    n_used: int  # leading frequencies entering the regression


@dataclass(frozen=True, eq=False)
class WaveletVariances:
    levels: np.ndarray
    scales: np.ndarray
    variances: np.ndarray
    edofs: np.ndarray
    first_level: int


def _odd_values(series, warn: list[str]) -> np.ndarray:
    x = as_series(series).values
    if x.size % 2 == 0:
        warn.append("even number of samples: last sample dropped to get 2m+1 points")
        x = x[:-1]
    return x


def semi_transform(values, omega, endpoint: str = "printed") -> np.ndarray:
    """Evaluate ``B(omega)`` at arbitrary frequencies for ``2m+1`` samples.

    ``endpoint="printed"`` uses the leading term ``(X_0 + X_1)/2``;
    ``endpoint="trapezoid"`` uses ``(X_0 + X_{2m})/2``.
    """
    x = np.asarray(values, dtype=float)
    if x.size % 2 == 0 or x.size < 3:
        raise InvalidParameters("semi_transform needs an odd number (>= 3) of samples")
    m = (x.size - 1) // 2
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    lead = (x[0] + x[1]) / 2 if endpoint == "printed" else (x[0] + x[-1]) / 2
    i = np.arange(1, 2 * m)
    basis = np.cos(np.outer(omega, (i - m) / m))
    return (lead + basis @ x[1:2 * m]) / m


@lru_cache(maxsize=32)
def _semi_basis(m: int, L: int) -> np.ndarray:
    i = np.arange(1, 2 * m)
    omega = 2 * np.pi * np.arange(1, L + 1)
    basis = np.cos(np.outer(omega, (i - m) / m))
    basis.setflags(write=False)
    return basis


def semi_L(n_s: int) -> int:
    m = (n_s - 1) // 2
    return int(np.floor(min(m / 2, n_s ** (2.0 / 3.0))))


def dct2_L(n_s: int) -> int:
    m = (n_s - 1) // 2
    return int(np.floor(min(2 * m, 4 * n_s ** (2.0 / 3.0))))


def semiperiodogram(series, endpoint: str = "printed", _warn: list | None = None) -> Periodogram:
    """Semi-periodogram ``J(2 pi l) = B(2 pi l)**2`` for ``l = 1..L``."""
    warn = [] if _warn is None else _warn
    x = _odd_values(series, warn)
    m = (x.size - 1) // 2
    if m < 4:
        raise SeriesTooShort(f"semi-periodogram needs m >= 4, got m = {m}")
    L = semi_L(x.size)
    lead = (x[0] + x[1]) / 2 if endpoint == "printed" else (x[0] + x[-1]) / 2
    B = (lead + _semi_basis(m, L) @ x[1:2 * m]) / m
    # magnitude of the terms entering B; coefficients below this are rounding noise
    zero = _ZERO_TOL * (abs(lead) + np.sum(np.abs(x[1:2 * m]))) / m
    J = np.where(np.abs(B) <= zero, 0.0, B * B)
    return Periodogram(2 * np.pi * np.arange(1, L + 1), J, "semi", m, L)


def dct2_transform(values, omega) -> np.ndarray:
    """Evaluate the DCT-II ``B~(omega)`` at arbitrary frequencies for ``2m+1`` samples."""
    x = np.asarray(values, dtype=float)
    if x.size % 2 == 0 or x.size < 3:
        raise InvalidParameters("dct2_transform needs an odd number (>= 3) of samples")
    m = (x.size - 1) // 2
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    i = np.arange(2 * m + 1)
    basis = np.cos(np.outer(omega, (2 * i + 1) / (4 * m)))
    return np.sqrt(2.0 / (2 * m + 1)) * (basis @ x)


def dct2_periodogram(series, _warn: list | None = None) -> Periodogram:
    """DCT-II periodogram at ``omega_l = 2 pi l m/(2m+1)``, ``l = 1..L``."""
    warn = [] if _warn is None else _warn
    x = _odd_values(series, warn)
    N = x.size
    m = (N - 1) // 2
    if m < 4:
        raise SeriesTooShort(f"DCT-II periodogram needs m >= 4, got m = {m}")
    L = dct2_L(N)
    # scipy's unnormalized DCT-II is 2 * sum x_i cos(pi k (2i+1) / (2N))
    B = np.sqrt(2.0 / N) * scipy.fft.dct(x, type=2)[1:L + 1] / 2
    zero = _ZERO_TOL * np.sqrt(2.0 / N) * np.sum(np.abs(x))
    J = np.where(np.abs(B) <= zero, 0.0, B * B)
    omega = 2 * np.pi * np.arange(1, L + 1) * m / N
    return Periodogram(omega, J, "dct2", m, L)


def _spectral_estimate(pg: Periodogram, method: str, warn: list[str]) -> Estimate:
    usable = pg.values > 0
    if usable.sum() < 2:
        raise DegenerateSeries(f"{method}: fewer than 2 nonzero periodogram ordinates")
    if not usable.all():
        warn.append(f"{int((~usable).sum())} zero periodogram ordinate(s) skipped")
    s = np.log(pg.frequencies)
    fit = fit_line(s[usable], np.log(pg.values[usable]))
    fd = 2.5 + fit.slope / 2
    return Estimate(fd, method, fit, warnings=tuple(warn) + range_warnings(fd, 1))


def semiperiodogram_estimate(series, endpoint: str = "printed") -> Estimate:
    warn: list[str] = []
    pg = semiperiodogram(series, endpoint, warn)
    return _spectral_estimate(pg, "periodogram", warn)


def dct2_estimate(series) -> Estimate:
    warn: list[str] = []
    pg = dct2_periodogram(series, warn)
    return _spectral_estimate(pg, "dct2", warn)


# Daubechies scaling filters (unit-norm convention, sum = sqrt(2)).
_S3 = np.sqrt(3.0)
WAVELET_FILTERS = {
    "haar": np.array([1.0, 1.0]) / np.sqrt(2.0),
    "d4": np.array([1 + _S3, 3 + _S3, 3 - _S3, 1 - _S3]) / (4 * np.sqrt(2.0)),
    "la8": np.array([
        -0.07576571478927333, -0.02963552764599851, 0.49761866763201545,
        0.8037387518059161, 0.29785779560527736, -0.09921954357684722,
        -0.012603967262037833, 0.0322231006040427,
    ]),
}


def modwt_filters(filter: str = "haar") -> tuple[np.ndarray, np.ndarray]:
    """MODWT (wavelet, scaling) filters, each rescaled by ``1/sqrt(2)``."""
    try:
        g = WAVELET_FILTERS[filter.lower()]
    except KeyError:
        raise InvalidParameters(
            f"unknown wavelet filter {filter!r}; choose from {sorted(WAVELET_FILTERS)}") from None
    L = g.size
    h = np.array([(-1) ** l * g[L - 1 - l] for l in range(L)])
    return h / np.sqrt(2.0), g / np.sqrt(2.0)


def _circular_filter(x: np.ndarray, taps: np.ndarray, stride: int) -> np.ndarray:
    out = np.zeros_like(x)
    for l, c in enumerate(taps):
        out += c * np.roll(x, stride * l)
    return out


def modwt(series, filter: str = "haar", levels: int | None = None,
          return_scaling: bool = False):
    """MODWT wavelet coefficients of the reflected series ``(X, reversed X)``.

    Returns ``levels`` vectors of length ``2 n_s`` (and the final scaling
    coefficients if ``return_scaling``).
    """
    x = np.asarray(as_series(series).values)
    n_s = x.size
    jmax = int(np.floor(np.log2(n_s)))
    levels = jmax if levels is None else int(levels)
    if levels < 1 or 2 ** levels > n_s:
        raise SeriesTooShort(f"{levels} MODWT levels need at least {2 ** max(levels, 1)} samples")
    h, g = modwt_filters(filter)
    v = np.concatenate((x, x[::-1]))
    coeffs = []
    for j in range(1, levels + 1):
        stride = 2 ** (j - 1)
        coeffs.append(_circular_filter(v, h, stride))
        v = _circular_filter(v, g, stride)
    if return_scaling:
        return coeffs, v
    return coeffs


def wavelet_variances(series, filter: str = "haar") -> WaveletVariances:
    x = as_series(series).values
    n_s = x.size
    jmax = int(np.floor(np.log2(n_s)))
    coeffs = modwt(x, filter, jmax)
    levels = np.arange(1, jmax + 1)
    nu2 = np.array([np.sum(w * w) / (2 * n_s) for w in coeffs])
    width = modwt_filters(filter)[0].size
    Lj = (2 ** levels - 1) * (width - 1) + 1
    M = np.maximum(n_s - Lj + 1, 1)
    edof = np.maximum(M / 2.0 ** levels, 1.0)
    first = max(1, int(np.floor(np.log2(n_s) / 3 - 1)))
    return WaveletVariances(levels, 2.0 ** (levels - 1), nu2, edof, first)


def wavelet_estimate(series, filter: str = "haar") -> Estimate:
    """Wavelet-variance estimator ``2 - slope/2`` with a weighted log-log fit.

    Levels ``j = max(1, floor(log2(n_s)/3 - 1)) .. floor(log2 n_s)`` are used.
    Each level is weighted by ``1/trigamma(edof/2)``, the approximate inverse
    variance of a log chi-square variate with ``edof`` degrees of freedom.
    """
    x = as_series(series).values
    if x.size < 4:
        raise SeriesTooShort("wavelet estimator needs at least 4 samples")
    wv = wavelet_variances(x, filter)
    # rounding noise in the coefficients scales with the data magnitude
    zero = (1e-12 * np.max(np.abs(x))) ** 2
    in_range = wv.levels >= wv.first_level
    usable = in_range & (wv.variances > zero)
    if usable.sum() < 2:
        raise DegenerateSeries("wavelet: fewer than 2 levels with positive variance")
    s = np.log(wv.scales)
    y = np.log(np.where(wv.variances > 0, wv.variances, np.nan))
    weights = 1.0 / polygamma(1, wv.edofs / 2.0)
    fit = fit_line(s[usable], y[usable], weights[usable])
    fd = 2.0 - fit.slope / 2
    excluded = ~usable & (wv.variances > 0)
    warn = []
    if (in_range & ~usable).any():
        warn.append("zero wavelet variance at some levels")
    return Estimate(fd, "wavelet", fit, warnings=tuple(warn) + range_warnings(fd, 1),
                    excluded_s=s[excluded], excluded_y=y[excluded])
