import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fracdim import (Grid, TransectConfig, filter_estimate, filter_variation, isotropic_estimate,
                     isotropic_variation, relevant_distances, square_increment_estimate,
                     square_increment_variation, transect_estimate)
from fracdim.errors import AllTransectsDegenerate, DegenerateGrid, InvalidParameters, NoPairs
from fracdim.spatial import lattice_offsets, transect_fds

SMALL = Grid([[0, 1], [2, 3]])


def _surface(f, n1, n2=None):
    n2 = n1 if n2 is None else n2
    t1 = np.arange(n1 + 1)[:, None] / n1
    t2 = np.arange(n2 + 1)[None, :] / n2
    return Grid(f(t1, t2) + 0 * t1 * t2)


def test_two_by_two_hand_values():
    assert isotropic_variation(SMALL, 1, 1) == 0.75
    assert isotropic_variation(SMALL, 1, np.sqrt(2)) == 1.0
    with pytest.raises(NoPairs):
        isotropic_variation(SMALL, 1, 2)


def test_lattice_offsets():
    assert lattice_offsets(1) == [(0, 1), (1, 0)]
    assert lattice_offsets(2) == [(1, -1), (1, 1)]
    assert lattice_offsets(25) == [(0, 5), (3, -4), (3, 4), (4, -3), (4, 3), (5, 0)]
    rd = relevant_distances((3, 3), (1, 2, 4))
    # 12 unordered horizontal/vertical pairs, 8 diagonal pairs, 6 at distance 2
    assert rd.pair_counts == (24, 16, 12)
    with pytest.raises(InvalidParameters):
        isotropic_variation(SMALL, 1, 1.5)


def test_constant_grid():
    g = Grid(np.full((6, 6), 2.0))
    for v in (isotropic_variation, filter_variation):
        assert v(g, 1, 2) == 0
    for f in (isotropic_estimate, filter_estimate, square_increment_estimate):
        with pytest.raises(DegenerateGrid):
            f(g)
    with pytest.raises(AllTransectsDegenerate):
        transect_estimate(g)


def test_planar_surfaces():
    g = _surface(lambda a, b: 0.3 * a - 1.7 * b, 8)
    for k in (2, 2 * np.sqrt(2), 4):
        assert filter_variation(g, 1, k) == pytest.approx(0, abs=1e-14)
    for k in (np.sqrt(2), 2 * np.sqrt(2)):
        assert square_increment_variation(g, 1, k) == pytest.approx(0, abs=1e-14)


def test_bilinear_surface():
    n = 8
    g = _surface(lambda a, b: a * b, n)
    # square increments equal side**2 / n**2 exactly, giving slope 2p
    for p in (1.0, 2.0):
        est = square_increment_estimate(g, p)
        assert est.fd == pytest.approx(1.0, abs=1e-12)
    assert square_increment_estimate(g, 1).warnings
    # second differences only survive along the diagonals
    assert filter_variation(g, 1, 2) == pytest.approx(0, abs=1e-15)
    assert filter_variation(g, 1, 4) == pytest.approx(0, abs=1e-15)
    assert filter_variation(g, 1, 2 * np.sqrt(2)) > 0
    assert filter_variation(g, 1, 2 * np.sqrt(2)) == pytest.approx(
        oracles.filter_variation(g.values, 1, 8), rel=1e-12)
    assert isotropic_estimate(_surface(lambda a, b: a * b, 64)).fd == pytest.approx(2, abs=0.05)


def test_planar_ramp_transect():
    g = _surface(lambda a, b: a + 0 * b, 16)
    est = transect_estimate(g)
    assert est.fd == pytest.approx(1 + oracles.ramp_variation_fd(16, 1), abs=1e-12)
    assert est.fd == pytest.approx(2, abs=0.01)
    assert any("skipped" in w for w in est.warnings)


def test_transect_config():
    g = Grid(np.random.default_rng(0).normal(size=(17, 17)))
    assert transect_estimate(g, diff_order=2).method == "transect.incr"
    assert transect_estimate(g, TransectConfig(p=2)).p == 2
    with pytest.raises(InvalidParameters):
        TransectConfig(min_valid_transects=0)
    with pytest.raises(AllTransectsDegenerate):
        transect_estimate(g, min_valid_transects=35)
    fds = transect_fds(g, TransectConfig())
    assert fds.size == 34
    assert transect_estimate(g).fd == pytest.approx(1 + np.median(fds), abs=1e-15)


def test_rectangular_grid():
    g = Grid(np.random.default_rng(1).normal(size=(9, 13)))
    assert g.n == 12
    for k2 in (1, 2, 4):
        assert isotropic_variation(g, 1, np.sqrt(k2)) == pytest.approx(
            oracles.isotropic_variation(g.values, 1, k2), rel=1e-12)


def test_single_cell_breakdown():
    rng = np.random.default_rng(2)
    X = np.cumsum(np.cumsum(rng.normal(size=(33, 33)), 0), 1) / 100
    fds = transect_fds(Grid(X), TransectConfig())
    X2 = X.copy()
    X2[10, 20] = 1e6
    fds2 = transect_fds(Grid(X2), TransectConfig())
    assert np.sum(fds != fds2) == 2
    lo, hi = np.sort(fds)[[15, 50]]
    assert lo <= np.median(fds2) <= hi


grids = st.tuples(st.integers(2, 6), st.integers(2, 6), st.integers(0, 2 ** 32 - 1)).map(
    lambda t: np.random.default_rng(t[2]).normal(size=(t[0], t[1])))


@settings(max_examples=60, deadline=None)
@given(grids, st.sampled_from([0.5, 1.0, 2.0]))
def test_variations_match_all_pairs_oracle(X, p):
    g = Grid(X)
    for k2 in (1, 2, 4, 5, 8, 16):
        try:
            val = isotropic_variation(g, p, np.sqrt(k2))
        except NoPairs:
            continue
        assert val == pytest.approx(oracles.isotropic_variation(X, p, k2), rel=1e-12, abs=1e-12)
    for k2 in (4, 8, 16):
        try:
            val = filter_variation(g, p, np.sqrt(k2))
        except NoPairs:
            continue
        assert val == pytest.approx(oracles.filter_variation(X, p, k2), rel=1e-12, abs=1e-12)
    for k2 in (2, 8):
        try:
            val = square_increment_variation(g, p, np.sqrt(k2))
        except NoPairs:
            continue
        assert val == pytest.approx(oracles.square_increment_variation(X, p, k2), rel=1e-12,
                                    abs=1e-12)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.floats(0.1, 20), st.booleans(), st.floats(-100, 100))
def test_affine_invariance_and_transpose(seed, a, neg, b):
    X = np.random.default_rng(seed).normal(size=(9, 9))
    a = -a if neg else a
    for f in (isotropic_estimate, filter_estimate, square_increment_estimate, transect_estimate):
        f0 = f(Grid(X)).fd
        assert f(Grid(a * X + b)).fd == pytest.approx(f0, abs=1e-9)
        assert f(Grid(X.T)).fd == pytest.approx(f0, abs=1e-12)
