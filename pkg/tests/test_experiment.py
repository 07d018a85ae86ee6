import math

import numpy as np
import pytest

from fracdim import CovarianceModel, StudyConfig, estimate, run_study, simulate_1d
from fracdim.errors import InvalidParameters
from fracdim.experiment import CSV_COLUMNS, summarize
from fracdim.simulate import derive_seed

SMALL = StudyConfig(alphas=(1.0, 1.6), ns=(64, 128), estimators=("madogram", "variogram"),
                    replicates=6, seed=9)


def test_single_replicate_reduces_to_one_estimate():
    cfg = StudyConfig(alphas=(1.0,), ns=(128,), estimators=("madogram",), replicates=1, seed=3)
    cell = run_study(cfg).cells[0]
    model = CovarianceModel(alpha=1.0)
    x = simulate_1d(model, 128, derive_seed(3, "sim", model.family, 1.0, 1.0, None, 128, 0))
    fd = estimate(x, "madogram").fd
    assert cell.mean == fd and cell.bias == fd - 1.5 and cell.sd == 0.0
    assert cell.rmse == pytest.approx(abs(fd - 1.5), rel=1e-15)


def test_rmse_identity_and_layout():
    res = run_study(SMALL)
    assert len(res.cells) == 2 * 2 * 2
    for c in res.cells:
        assert c.rmse ** 2 == pytest.approx(c.bias ** 2 + c.sd ** 2, rel=1e-12)
        assert c.truth == 2 - c.alpha / 2 and c.replicates == 6 and c.failures == 0
    # the same path feeds both estimators in a replicate
    assert res.raw[(1.0, 64)].shape == (6, 2)
    lines = res.to_csv().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS) and len(lines) == 9


def test_deterministic_across_runs_and_workers():
    a = run_study(SMALL)
    b = run_study(SMALL, workers=2)
    assert a.to_csv() == b.to_csv() and a.to_json() == b.to_json()


def test_summarize_failures():
    s = summarize(np.array([1.0, np.nan, 2.0]), 1.5)
    assert s["replicates"] == 2 and s["bias"] == 0.0 and s["sd"] == 0.5
    assert s["mcse"] == pytest.approx(0.5 / math.sqrt(2))
    assert math.isnan(summarize(np.array([np.nan]), 1.0)["mean"])


def test_config_validation_and_round_trip():
    d = SMALL.to_dict()
    assert StudyConfig.from_dict(d) == SMALL
    with pytest.raises(InvalidParameters):
        StudyConfig.from_dict({**d, "bogus": 1})
    with pytest.raises(InvalidParameters):
        StudyConfig(estimators=("isotropic",))
    with pytest.raises(InvalidParameters):
        StudyConfig(replicates=0)
    cfg = StudyConfig(dim=2, estimators=("filter",), contamination={"count": 1, "sd": 1.0})
    assert cfg.truth(1.0) == 2.5 and cfg.contamination.count == 1


def test_contaminated_two_d_study():
    cfg = StudyConfig(alphas=(1.0,), ns=(16,), estimators=("transect", "filter:p=2"),
                      replicates=3, dim=2, contamination={"count": 2, "sd": 0.1}, seed=1)
    res = run_study(cfg)
    assert res.cell("transect").replicates == 3
    assert np.all(np.isfinite(res.raw[(1.0, 16)]))
