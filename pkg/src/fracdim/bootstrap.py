"""Parametric bootstrap intervals for 1-d dimension estimates.

The fitted dimension and scale define a powered exponential model with unit
variance, ``alpha = 4 - 2 fd`` and range ``c = scale**(1/alpha)``. Only the
variation and Hall-Wood fits have an intercept on the lag axis; for the box,
spectral and wavelet estimators the scale comes from a madogram fit instead.
Paths of the same length are simulated from the model and re-estimated; the
interval is the central empirical quantile range of those replicate estimates.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .core import Estimate, as_series
from .errors import EstimateOutOfRange, FracDimError, InvalidParameters
from .methods import MethodSpec, estimate, parse_method
from .parallel import ordered_map
from .simulate import CovarianceModel, derive_seed, embedding_1d, simulate_1d

# fd is clamped into this band before alpha is derived
CLAMP = (1.01, 1.99)
# estimates further than this outside [1, 2] are not treated as clampable
CLAMP_SLACK = 0.5
MIN_B_WARN = 20
# estimators whose intercept is a variogram-type level at unit lag
LAG_DOMAIN = ("variation", "hallwood")


@dataclass(frozen=True, eq=False)
class BootstrapResult:
    point: Estimate
    level: float
    lower: float
    upper: float
    replicates: int
    boot_estimates: np.ndarray
    model: CovarianceModel
    failures: int = 0
    warnings: tuple[str, ...] = ()


def bootstrap_model(point: Estimate, range_from: Estimate | None = None
                    ) -> tuple[CovarianceModel, list[str]]:
    """Powered exponential model matching ``point`` (fd and fitted scale).

    ``range_from`` supplies the fitted scale instead of ``point``; the
    fractal index always comes from ``point``.
    """
    fd = point.fd
    warn = []
    if not np.isfinite(fd) or fd < 1 - CLAMP_SLACK or fd > 2 + CLAMP_SLACK:
        raise EstimateOutOfRange(
            f"estimate {fd!r} is too far outside (1, 2) to define a bootstrap model")
    if not 1 < fd < 2:
        clamped = min(max(fd, CLAMP[0]), CLAMP[1])
        warn.append(f"fd {fd:.6g} clamped to {clamped} to derive alpha")
        fd = clamped
    alpha = 4.0 - 2.0 * fd
    scale = (point if range_from is None else range_from).scale
    if not (np.isfinite(scale) and scale > 0):
        raise EstimateOutOfRange(f"fitted scale {scale!r} cannot define a range parameter")
    return CovarianceModel("powered_exponential", alpha, c=scale ** (1.0 / alpha)), warn


def _replicate(args):
    model, n, method, seed = args
    x = simulate_1d(model, n, seed)
    try:
        return estimate(x, method).fd
    except FracDimError:
        return np.nan


def bootstrap_ci(series, method: str | MethodSpec = "madogram", B: int = 200,
                 level: float = 0.90, seed: int = 0, workers: int = 1) -> BootstrapResult:
    """Parametric bootstrap interval for a 1-d estimator.

    Parameters
    ----------
    series : Series or array_like
    method : str or MethodSpec
        Any 1-d method accepted by :func:`fracdim.methods.parse_method`.
    B : int
        Number of bootstrap paths.
    level : float
        Central coverage level in (0, 1).
    seed : int
        Master seed; replicate ``i`` uses ``derive_seed(seed, "bootstrap", i)``.
    workers : int
        Worker processes; the result does not depend on it.
    """
    spec = parse_method(method)
    if spec.dim != 1:
        raise InvalidParameters("the bootstrap is defined for 1-d estimators only")
    if int(B) != B or B < 2:
        raise InvalidParameters("B must be an integer >= 2")
    if not 0 < level < 1:
        raise InvalidParameters("level must lie strictly between 0 and 1")
    x = as_series(series)
    point = estimate(x, spec)
    ref = None
    if spec.name not in LAG_DOMAIN:
        ref = estimate(x, "madogram")
    model, warn = bootstrap_model(point, ref)
    if ref is not None:
        warn.append(f"range parameter taken from the madogram fit; the {spec} intercept "
                    "is not on the lag axis")
    if B < MIN_B_WARN:
        warn.append(f"B = {B} is small; quantiles are unreliable below {MIN_B_WARN}")
    tasks = [(model, x.n, spec, derive_seed(seed, "bootstrap", i)) for i in range(int(B))]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        embedding_1d(model, x.n)   # fail early, before any worker starts
        fds = np.array(ordered_map(_replicate, tasks, workers))
    ok = np.isfinite(fds)
    failures = int((~ok).sum())
    if failures:
        warn.append(f"{failures} of {B} bootstrap replicate(s) failed and were excluded")
    good = fds[ok]
    if good.size < 2:
        raise EstimateOutOfRange("fewer than 2 successful bootstrap replicates")
    tail = (1.0 - level) / 2
    lower, upper = np.quantile(good, [tail, 1.0 - tail])
    return BootstrapResult(point, float(level), float(lower), float(upper), int(B), fds,
                           model, failures, tuple(warn))
