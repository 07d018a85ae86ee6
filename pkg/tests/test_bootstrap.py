import numpy as np
import pytest

from fracdim import CovarianceModel, Estimate, bootstrap_ci, fit_line, simulate_1d
from fracdim.bootstrap import CLAMP, bootstrap_model
from fracdim.errors import EstimateOutOfRange, InvalidParameters

X = simulate_1d(CovarianceModel(alpha=1.0), 256, 0)


def _fake(fd, scale=0.5):
    fit = fit_line([0.0, 1.0], [np.log(scale), np.log(scale) + 1.0])
    return Estimate(fd, "madogram", fit, p=1.0)


def test_interval_is_the_central_quantile_range():
    res = bootstrap_ci(X, "madogram", B=50, level=0.9, seed=1)
    assert res.boot_estimates.size == 50 and res.failures == 0
    lo, hi = np.quantile(res.boot_estimates, [0.05, 0.95])
    assert (res.lower, res.upper) == (lo, hi)
    assert res.lower < res.point.fd < res.upper
    assert res.model.family == "powered_exponential" and res.model.variance == 1.0


def test_deterministic_and_worker_independent():
    a = bootstrap_ci(X, "madogram", B=30, seed=4)
    b = bootstrap_ci(X, "madogram", B=30, seed=4, workers=2)
    assert np.array_equal(a.boot_estimates, b.boot_estimates)
    assert (a.lower, a.upper) == (b.lower, b.upper)
    c = bootstrap_ci(X, "madogram", B=30, seed=5)
    assert not np.array_equal(a.boot_estimates, c.boot_estimates)


def test_level_monotonicity():
    r80 = bootstrap_ci(X, "variogram", B=40, level=0.8, seed=2)
    r95 = bootstrap_ci(X, "variogram", B=40, level=0.95, seed=2)
    assert r95.lower <= r80.lower and r80.upper <= r95.upper


def test_model_from_estimate():
    model, warn = bootstrap_model(_fake(1.5, 0.5))
    assert model.alpha == 1.0 and model.c == pytest.approx(0.5)
    assert not warn
    model, warn = bootstrap_model(_fake(2.2))
    assert model.alpha == pytest.approx(4 - 2 * CLAMP[1]) and warn
    model, warn = bootstrap_model(_fake(0.9))
    assert model.alpha == pytest.approx(4 - 2 * CLAMP[0]) and warn
    for bad in (3.0, 0.2, np.nan):
        with pytest.raises(EstimateOutOfRange):
            bootstrap_model(_fake(bad))


def test_validation_and_small_B_warning():
    with pytest.raises(InvalidParameters):
        bootstrap_ci(X, B=1)
    with pytest.raises(InvalidParameters):
        bootstrap_ci(X, level=1.0)
    assert any("small" in w for w in bootstrap_ci(X, B=5).warnings)


def test_non_lag_estimators_take_range_from_madogram():
    res = bootstrap_ci(X, "wavelet", B=20, seed=3)
    mad = bootstrap_ci(X, "madogram", B=20, seed=3)
    assert res.model.alpha == pytest.approx(4 - 2 * res.point.fd)
    assert res.model.c == pytest.approx(mad.point.scale ** (1 / res.model.alpha))
    assert any("madogram" in w for w in res.warnings)
    assert not any("madogram" in w for w in mad.warnings)
