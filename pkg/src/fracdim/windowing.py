"""Sliding-block estimation along long profiles."""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import Estimate, as_series
from .errors import FracDimError, InvalidParameters, WindowTooLarge
from .methods import estimate, parse_method
from .parallel import ordered_map


@dataclass(frozen=True)
class ErrorMarker:
    """Stands in for an estimate when a block could not be estimated."""

    code: str
    message: str


@dataclass(frozen=True)
class WindowSpec:
    width: int = 1024
    step: int = 10
    methods: tuple = ("madogram",)

    def __post_init__(self):
        if int(self.width) != self.width or self.width < 2:
            raise InvalidParameters("window width must be an integer >= 2")
        if int(self.step) != self.step or self.step < 1:
            raise InvalidParameters("window step must be an integer >= 1")
        specs = tuple(parse_method(m) for m in self.methods)
        if not specs:
            raise InvalidParameters("at least one method is required")
        if any(s.dim != 1 for s in specs):
            raise InvalidParameters("sliding windows take 1-d methods only")
        object.__setattr__(self, "methods", specs)


@dataclass(frozen=True, eq=False)
class WindowRecord:
    start: int
    midpoint: int
    results: dict = field(default_factory=dict)  # method label -> Estimate | ErrorMarker


def block_starts(length: int, spec: WindowSpec) -> range:
    if spec.width > length:
        raise WindowTooLarge(f"window width {spec.width} exceeds series length {length}")
    return range(0, length - spec.width + 1, spec.step)


def _block(args) -> dict:
    values, methods = args
    out = {}
    for m in methods:
        try:
            out[str(m)] = estimate(values, m)
        except FracDimError as exc:
            out[str(m)] = ErrorMarker(exc.code, str(exc))
    return out


def sliding_estimates(series, spec: WindowSpec | None = None, workers: int = 1,
                      **kwargs) -> list[WindowRecord]:
    """Estimate every block ``[start, start + width)``, ``start = 0, step, ...``.

    A block that fails (a flat stretch, say) gets an :class:`ErrorMarker`
    for that method; other blocks are unaffected. Midpoints are
    ``start + width // 2``.
    """
    spec = WindowSpec(**kwargs) if spec is None else spec
    x = as_series(series).values
    starts = block_starts(x.size, spec)
    tasks = [(x[s:s + spec.width], spec.methods) for s in starts]
    results = ordered_map(_block, tasks, workers)
    return [WindowRecord(s, s + spec.width // 2, r) for s, r in zip(starts, results)]


def trace_rows(records: list[WindowRecord]):
    """Flatten records into ``(midpoint, method, fd or None, error code or None)`` rows."""
    for rec in records:
        for name, res in rec.results.items():
            if isinstance(res, Estimate):
                yield rec.midpoint, name, res.fd, None
            else:
                yield rec.midpoint, name, None, res.code
