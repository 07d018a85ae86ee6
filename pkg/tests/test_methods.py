import numpy as np
import pytest

from fracdim import Grid, MethodSpec, Series, estimate, parse_method
from fracdim.errors import ParseError


@pytest.mark.parametrize("text, label", [
    ("madogram", "madogram"),
    ("variogram", "variogram"),
    ("Rodogram", "rodogram"),
    ("variation:p=1", "madogram"),
    ("variation:p=1.5:diff=2", "variation:p=1.5:diff=2"),
    ("variation:p=2:L=3", "variogram:L=3"),
    ("hallwood", "hallwood"),
    ("boxcount.naive", "boxcount.naive"),
    ("wavelet:filter=d4", "wavelet:filter=d4"),
    ("periodogram:endpoint=trapezoid", "periodogram:endpoint=trapezoid"),
    ("transect", "transect.var:p=1"),
    ("transect:p=2:diff=2", "transect.incr:p=2"),
    ("filter", "filter:p=1"),
])
def test_labels_round_trip(text, label):
    spec = parse_method(text)
    assert str(spec) == label
    assert parse_method(label) == spec


@pytest.mark.parametrize("text", ["", "nope", "madogram:p=2", "variation:p=0", "variation:p=x",
                                  "variation:diff=3", "boxcount:p=1", "variation:p"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_method(text)


def test_dimension_mismatch():
    g = Grid(np.random.default_rng(0).normal(size=(8, 8)))
    with pytest.raises(ParseError, match="2-d"):
        estimate(g, "madogram")
    with pytest.raises(ParseError):
        estimate(Series(np.arange(9.0)), "isotropic")
    assert parse_method("squareincr").dim == 2 and parse_method("dct2").dim == 1


def test_dispatch_matches_direct_calls():
    from fracdim import (boxcount_estimate, dct2_estimate, hallwood_estimate,
                         variation_estimate, wavelet_estimate)
    x = Series(np.random.default_rng(1).normal(size=257).cumsum())
    assert estimate(x, "variogram").fd == variation_estimate(x, 2).fd
    assert estimate(x, "hallwood").fd == hallwood_estimate(x).fd
    assert estimate(x, "boxcount").fd == boxcount_estimate(x, "standard").fd
    assert estimate(x, "dct2").fd == dct2_estimate(x).fd
    assert estimate(x, "wavelet:filter=la8").fd == wavelet_estimate(x, "la8").fd
    assert MethodSpec("variation", 1.0)(x).fd == estimate(x).fd
