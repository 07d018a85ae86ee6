"""Estimator lookup by name.

Methods are written ``name[:key=value]...``, for example ``madogram``,
``variation:p=1.5:diff=2``, ``boxcount.naive``, ``wavelet:filter=d4`` or
``transect:p=1:diff=2``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .boxcount import boxcount_estimate
from .core import Estimate, Grid, Series, as_grid, as_series
from .errors import InvalidParameters, ParseError
from .spatial import (TransectConfig, filter_estimate, isotropic_estimate,
                      square_increment_estimate, transect_estimate)
from .spectral import dct2_estimate, semiperiodogram_estimate, wavelet_estimate
from .variation import hallwood_estimate, variation_estimate

_ALIASES = {
    "madogram": ("variation", 1.0),
    "variogram": ("variation", 2.0),
    "rodogram": ("variation", 0.5),
}
METHODS_1D = ("variation", "hallwood", "boxcount", "boxcount.naive", "periodogram",
              "dct2", "wavelet")
METHODS_2D = ("isotropic", "filter", "squareincr", "transect.var", "transect.incr")
_OPTIONS = {
    "variation": {"p", "diff", "L"},
    "hallwood": {"L"},
    "boxcount": set(),
    "boxcount.naive": set(),
    "periodogram": {"endpoint"},
    "dct2": set(),
    "wavelet": {"filter"},
    "isotropic": {"p"},
    "filter": {"p"},
    "squareincr": {"p"},
    "transect.var": {"p", "L"},
    "transect.incr": {"p", "L"},
}


@dataclass(frozen=True)
class MethodSpec:
    name: str
    p: float | None = None
    diff: int = 1
    L: int = 2
    filter: str = "haar"
    endpoint: str = "printed"

    @property
    def dim(self) -> int:
        return 2 if self.name in METHODS_2D else 1

    def __str__(self) -> str:
        if self.name == "variation":
            for alias, (_, p) in _ALIASES.items():
                if p == self.p:
                    out = alias
                    break
            else:
                out = f"variation:p={self.p:g}"
            if self.diff != 1:
                out += f":diff={self.diff}"
        elif self.name in ("isotropic", "filter", "squareincr", "transect.var", "transect.incr"):
            out = f"{self.name}:p={self.p:g}"
        elif self.name == "wavelet" and self.filter != "haar":
            out = f"wavelet:filter={self.filter}"
        elif self.name == "periodogram" and self.endpoint != "printed":
            out = f"periodogram:endpoint={self.endpoint}"
        else:
            out = self.name
        if self.L != 2:
            out += f":L={self.L}"
        return out

    def __call__(self, data) -> Estimate:
        return estimate(data, self)


def parse_method(text: str | MethodSpec) -> MethodSpec:
    """Parse ``name[:key=value]...`` into a :class:`MethodSpec`."""
    if isinstance(text, MethodSpec):
        return text
    parts = [t for t in str(text).strip().split(":") if t]
    if not parts:
        raise ParseError("empty method name")
    name = parts[0].lower()
    opts: dict[str, str] = {}
    for part in parts[1:]:
        if "=" not in part:
            raise ParseError(f"method option {part!r} is not key=value")
        k, v = part.split("=", 1)
        opts[k.strip()] = v.strip()
    p = None
    if name in _ALIASES:
        name, p = _ALIASES[name]
        if "p" in opts:
            raise ParseError(f"{parts[0]} fixes p; use 'variation:p=...' instead")
    if name == "transect":
        name = "transect.incr" if opts.get("diff") == "2" else "transect.var"
        opts.pop("diff", None)
    if name not in _OPTIONS:
        raise ParseError(f"unknown method {parts[0]!r}")
    unknown = set(opts) - _OPTIONS[name]
    if unknown:
        raise ParseError(f"method {name!r} does not accept option(s) {sorted(unknown)}")
    try:
        if "p" in opts:
            p = float(opts["p"])
        if p is None and name in ("variation",) + METHODS_2D:
            p = 1.0
        diff = int(opts.get("diff", 1))
        L = int(opts.get("L", 2))
    except ValueError as exc:
        raise ParseError(f"bad numeric option in {text!r}: {exc}") from None
    if p is not None and not p > 0:
        raise ParseError(f"power index must be positive in {text!r}")
    if diff not in (1, 2):
        raise ParseError(f"diff must be 1 or 2 in {text!r}")
    if name == "transect.incr":
        diff = 2
    return MethodSpec(name, p, diff, L, opts.get("filter", "haar"),
                      opts.get("endpoint", "printed"))


def estimate(data, method: str | MethodSpec = "madogram") -> Estimate:
    """Run one estimator on a :class:`Series` (1-d) or :class:`Grid` (2-d)."""
    spec = parse_method(method)
    if spec.dim == 1:
        if isinstance(data, Grid):
            raise ParseError(f"method {spec} needs 1-d data but got a 2-d grid")
        x = as_series(data)
        if spec.name == "variation":
            return variation_estimate(x, spec.p, spec.L, spec.diff)
        if spec.name == "hallwood":
            return hallwood_estimate(x, spec.L)
        if spec.name == "boxcount":
            return boxcount_estimate(x, "standard")
        if spec.name == "boxcount.naive":
            return boxcount_estimate(x, "naive")
        if spec.name == "periodogram":
            if spec.endpoint not in ("printed", "trapezoid"):
                raise InvalidParameters(f"unknown endpoint rule {spec.endpoint!r}")
            return semiperiodogram_estimate(x, spec.endpoint)
        if spec.name == "dct2":
            return dct2_estimate(x)
        return wavelet_estimate(x, spec.filter)
    if isinstance(data, Series):
        raise ParseError(f"method {spec} needs a 2-d grid but got a 1-d series")
    g = as_grid(data)
    if spec.name == "isotropic":
        return isotropic_estimate(g, spec.p)
    if spec.name == "filter":
        return filter_estimate(g, spec.p)
    if spec.name == "squareincr":
        return square_increment_estimate(g, spec.p)
    return transect_estimate(g, TransectConfig(spec.p, spec.diff, 1, spec.L))
