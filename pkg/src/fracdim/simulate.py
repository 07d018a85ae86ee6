"""Exact Gaussian simulation by circulant embedding, and additive outliers.

Stationary families are embedded directly; fractional Brownian motion is
simulated through its stationary increments (fractional Gaussian noise) and
cumulative summation, so ``X_0 = 0``.
"""
from __future__ import annotations

import hashlib
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import Grid, Series
from .errors import EmbeddingFailure, InvalidParameters

FAMILIES = ("powered_exponential", "cauchy", "dagum", "fbm")

# negative eigenvalues down to this fraction of the largest one are rounding noise
EIGEN_TOL = 1e-10
MAX_DOUBLINGS_1D = 14
MAX_EMBED_2D = 2 ** 22


@dataclass(frozen=True)
class CovarianceModel:
    """Parametric covariance or variogram with fractal index ``alpha``.

    ============================  =======================================
    powered_exponential           ``exp(-|ct|**alpha)``, alpha in (0, 2]
    cauchy                        ``(1 + |ct|**alpha)**(-tau/alpha)``
    dagum                         ``1 - (|ct|**tau/(1+|ct|**tau))**(alpha/tau)``
    fbm                           variogram ``|ct|**alpha``
    ============================  =======================================

    Stationary covariances are multiplied by ``variance``.
    """

    family: str = "powered_exponential"
    alpha: float = 1.0
    c: float = 1.0
    tau: float | None = None
    variance: float = 1.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameters(f"unknown covariance family {self.family!r}")
        a = self.alpha
        if not (np.isfinite(a) and 0 < a <= 2):
            raise InvalidParameters(f"fractal index alpha must lie in (0, 2], got {a}")
        if not (np.isfinite(self.c) and self.c > 0):
            raise InvalidParameters(f"range parameter c must be positive, got {self.c}")
        if not (np.isfinite(self.variance) and self.variance > 0):
            raise InvalidParameters("variance must be positive")
        if self.family == "cauchy":
            if self.tau is None or not self.tau > 0:
                raise InvalidParameters("Cauchy family needs tau > 0")
        elif self.family == "dagum":
            if self.tau is None or not 0 < self.tau <= 2:
                raise InvalidParameters("Dagum family needs tau in (0, 2]")
            if not a < self.tau:
                raise InvalidParameters("Dagum family needs alpha < tau")

    @property
    def stationary(self) -> bool:
        return self.family != "fbm"

    @property
    def dimension_1d(self) -> float:
        return 2.0 - self.alpha / 2


def covariance(model: CovarianceModel, t):
    """Covariance ``sigma(t)``; defined for the stationary families only."""
    if not model.stationary:
        raise InvalidParameters("fractional Brownian motion has no stationary covariance")
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise InvalidParameters("distances must be nonnegative")
    ct = model.c * t
    a = model.alpha
    if model.family == "powered_exponential":
        out = np.exp(-ct ** a)
    elif model.family == "cauchy":
        out = (1.0 + ct ** a) ** (-model.tau / a)
    else:
        ctt = ct ** model.tau
        out = 1.0 - (ctt / (1.0 + ctt)) ** (a / model.tau)
    return model.variance * out


def variogram2(model: CovarianceModel, t):
    """Second-order variogram ``gamma_2(t)``."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise InvalidParameters("distances must be nonnegative")
    if model.family == "fbm":
        return model.variance * (model.c * t) ** model.alpha
    return covariance(model, 0.0) - covariance(model, t)


def _stable_int(key) -> int:
    digest = hashlib.sha256(repr(key).encode()).digest()
    return int.from_bytes(digest[:8], "little")


def derive_seed(seed, *keys) -> np.random.SeedSequence:
    """Independent seed for ``keys`` (replicate index, cell id, ...) under ``seed``."""
    base = 0 if seed is None else int(seed)
    entropy = [base] + [k if isinstance(k, int) and k >= 0 else _stable_int(k) for k in keys]
    return np.random.SeedSequence(entropy)


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.default_rng(seed)
    if seed is None:
        raise InvalidParameters("an explicit seed is required for reproducible simulation")
    return np.random.default_rng(np.random.SeedSequence(int(seed)))


@dataclass(frozen=True, eq=False)
class Embedding:
    first_row: np.ndarray   # covariance of the embedded circulant (1-d or 2-d)
    eigenvalues: np.ndarray  # real, clipped to be nonnegative
    min_eigenvalue: float    # before clipping
    max_imag: float          # size of the imaginary part discarded from the FFT

    @property
    def size(self):
        return self.first_row.shape


def _pow2_at_least(k: int) -> int:
    return 1 << max(int(k) - 1, 0).bit_length()


def _check_eigs(row: np.ndarray) -> tuple[np.ndarray, float, float]:
    spec = np.fft.fftn(row)
    lam = spec.real
    return lam, float(lam.min()), float(np.abs(spec.imag).max())


def _fgn_acvf(model: CovarianceModel, n: int, k: np.ndarray) -> np.ndarray:
    a = model.alpha
    k = np.abs(k).astype(float)
    return model.variance * (model.c / n) ** a * (
        np.abs(k + 1) ** a + np.abs(k - 1) ** a - 2 * k ** a)


@lru_cache(maxsize=64)
def embedding_1d(model: CovarianceModel, n: int) -> Embedding:
    """Circulant embedding for ``n + 1`` samples (``n`` increments for fBm).

    The embedding starts at the smallest power of two >= 2n and doubles until
    the spectrum is nonnegative, up to ``2**14`` times ``n``.
    """
    if n < 2:
        raise InvalidParameters("need n >= 2")
    M = _pow2_at_least(2 * n)
    cap = _pow2_at_least(2 ** MAX_DOUBLINGS_1D * n)
    while True:
        k = np.arange(M)
        lag = np.minimum(k, M - k)
        row = _fgn_acvf(model, n, lag) if model.family == "fbm" else covariance(model, lag / n)
        lam, lmin, imag = _check_eigs(row)
        if lmin >= -EIGEN_TOL * lam.max():
            break
        if M >= cap:
            raise EmbeddingFailure(
                f"no nonnegative circulant embedding up to size {M} for {model}")
        M *= 2
    if lmin < 0:
        warnings.warn(f"clipped negative circulant eigenvalues (min {lmin:.3g}) for {model}",
                      RuntimeWarning, stacklevel=2)
    row.setflags(write=False)
    lam = np.maximum(lam, 0.0)
    lam.setflags(write=False)
    return Embedding(row, lam, lmin, imag)


@lru_cache(maxsize=32)
def embedding_2d(model: CovarianceModel, n1: int, n2: int) -> Embedding:
    """Block-circulant embedding for an ``(n1+1) x (n2+1)`` lattice on the unit square."""
    if not model.stationary:
        raise InvalidParameters("2-d simulation supports stationary families only")
    if n1 < 1 or n2 < 1:
        raise InvalidParameters("need n1, n2 >= 1")
    M1, M2 = _pow2_at_least(2 * n1), _pow2_at_least(2 * n2)
    while True:
        k1 = np.arange(M1)
        k2 = np.arange(M2)
        d1 = np.minimum(k1, M1 - k1) / n1
        d2 = np.minimum(k2, M2 - k2) / n2
        row = covariance(model, np.hypot(d1[:, None], d2[None, :]))
        lam, lmin, imag = _check_eigs(row)
        if lmin >= -EIGEN_TOL * lam.max():
            break
        if 4 * M1 * M2 > MAX_EMBED_2D:
            raise EmbeddingFailure(
                f"no nonnegative block-circulant embedding up to {M1}x{M2} for {model}")
        M1, M2 = 2 * M1, 2 * M2
    if lmin < 0:
        warnings.warn(f"clipped negative circulant eigenvalues (min {lmin:.3g}) for {model}",
                      RuntimeWarning, stacklevel=2)
    row.setflags(write=False)
    lam = np.maximum(lam, 0.0)
    lam.setflags(write=False)
    return Embedding(row, lam, lmin, imag)


def _draw(lam: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal(lam.shape) + 1j * rng.standard_normal(lam.shape)
    return np.fft.fftn(np.sqrt(lam / lam.size) * z).real


def simulate_1d(model: CovarianceModel, n: int, seed) -> Series:
    """Exact Gaussian sample path at ``t = i/n``, ``i = 0..n``."""
    emb = embedding_1d(model, int(n))
    rng = make_rng(seed)
    x = _draw(emb.eigenvalues, rng)
    if model.family == "fbm":
        x = np.concatenate(([0.0], np.cumsum(x[:n])))
    else:
        x = x[:n + 1]
    return Series(x)


def simulate_2d(model: CovarianceModel, n1: int, n2: int | None, seed) -> Grid:
    """Exact Gaussian field on the ``(n1+1) x (n2+1)`` lattice of the unit square."""
    n2 = n1 if n2 is None else n2
    emb = embedding_2d(model, int(n1), int(n2))
    rng = make_rng(seed)
    return Grid(_draw(emb.eigenvalues, rng)[:n1 + 1, :n2 + 1])


@dataclass(frozen=True)
class ContaminationSpec:
    count: int = 1
    sd: float = 0.1

    def __post_init__(self):
        if int(self.count) != self.count or self.count < 0:
            raise InvalidParameters("outlier count must be a nonnegative integer")
        if not self.sd > 0:
            raise InvalidParameters("outlier standard deviation must be positive")


def contaminate(data, spec: ContaminationSpec, seed):
    """Add ``spec.count`` Gaussian outliers at uniformly drawn positions.

    Positions are drawn independently with replacement, so a position can be
    hit more than once. Returns the same type as ``data``.
    """
    if isinstance(data, (Series, Grid)):
        values = np.array(data.values)
    else:
        values = np.array(data, dtype=float)
    if spec.count > values.size:
        raise InvalidParameters(
            f"{spec.count} outliers requested for only {values.size} samples")
    if spec.count == 0:
        return data
    rng = make_rng(seed)
    flat = values.reshape(-1)
    idx = rng.integers(0, flat.size, size=spec.count)
    bumps = rng.normal(0.0, spec.sd, size=spec.count)
    np.add.at(flat, idx, bumps)
    if isinstance(data, Series):
        return Series(values)
    if isinstance(data, Grid):
        return Grid(values)
    return values
