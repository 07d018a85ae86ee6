"""Reading and writing data files and JSON result records.

Supported formats
-----------------
csv-column       one column of a CSV file (optional header row)
whitespace-text  numbers separated by whitespace; one value per line or a single
                 line gives a series, several values per line a grid
raw-f64-le       little-endian float64 with a one-line JSON sidecar ``<path>.json``
                 holding ``{"length": N}`` or ``{"rows": R, "cols": C}``
csv-matrix       comma-separated rows of a grid
"""
from __future__ import annotations

import csv
import io
import json
import os
import sys

import numpy as np

from .core import Estimate, Grid, Series
from .errors import ParseError

FORMATS = ("csv-column", "whitespace-text", "raw-f64-le", "csv-matrix")
SCHEMA_VERSION = 1


def guess_format(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    return {".csv": "csv-column", ".bin": "raw-f64-le", ".f64": "raw-f64-le",
            ".raw": "raw-f64-le"}.get(ext, "whitespace-text")


def _float(tok: str, where: str) -> float:
    try:
        return float(tok)
    except ValueError:
        raise ParseError(f"{where}: cannot parse {tok!r} as a number") from None


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _csv_rows(path: str) -> list[list[str]]:
    rows = [r for r in csv.reader(io.StringIO(_read_text(path))) if any(c.strip() for c in r)]
    if not rows:
        raise ParseError(f"{path}: no data")
    return rows


def _has_header(row: list[str]) -> bool:
    try:
        [float(c) for c in row]
        return False
    except ValueError:
        return True


def read_csv_column(path: str, column: int | str = 0) -> Series:
    rows = _csv_rows(path)
    header = rows[0] if _has_header(rows[0]) else None
    body = rows[1:] if header else rows
    if isinstance(column, str) and not column.lstrip("-").isdigit():
        if header is None or column not in [h.strip() for h in header]:
            raise ParseError(f"{path}: no column named {column!r}")
        idx = [h.strip() for h in header].index(column)
    else:
        idx = int(column)
    vals = []
    for lineno, r in enumerate(body, start=2 if header else 1):
        if idx >= len(r):
            raise ParseError(f"{path}:{lineno}: missing column {idx}")
        vals.append(_float(r[idx].strip(), f"{path}:{lineno}"))
    return Series(vals)


def read_csv_matrix(path: str) -> Grid:
    rows = _csv_rows(path)
    if _has_header(rows[0]):
        rows = rows[1:]
    vals = [[_float(c.strip(), f"{path}:{i + 1}") for c in r] for i, r in enumerate(rows)]
    if len({len(r) for r in vals}) != 1:
        raise ParseError(f"{path}: rows have different lengths")
    return Grid(vals)


def read_whitespace(path: str) -> Series | Grid:
    lines = [ln.split() for ln in _read_text(path).splitlines()]
    lines = [ln for ln in lines if ln and not ln[0].startswith("#")]
    if not lines:
        raise ParseError(f"{path}: no data")
    vals = [[_float(t, f"{path}:{i + 1}") for t in ln] for i, ln in enumerate(lines)]
    widths = {len(r) for r in vals}
    if len(vals) == 1 or widths == {1}:
        return Series([v for r in vals for v in r])
    if len(widths) != 1:
        raise ParseError(f"{path}: ragged rows; cannot tell a series from a grid")
    return Grid(vals)


def read_raw(path: str) -> Series | Grid:
    side = path + ".json"
    try:
        with open(side, encoding="utf-8") as fh:
            meta = json.load(fh)
    except OSError:
        raise ParseError(f"raw input needs a sidecar file {side}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{side}: invalid JSON ({exc.msg})") from None
    try:
        data = np.fromfile(path, dtype="<f8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if "length" in meta:
        if data.size != meta["length"]:
            raise ParseError(f"{path}: {data.size} values but sidecar says {meta['length']}")
        return Series(data)
    if "rows" in meta and "cols" in meta:
        r, c = int(meta["rows"]), int(meta["cols"])
        if data.size != r * c:
            raise ParseError(f"{path}: {data.size} values but sidecar says {r}x{c}")
        return Grid(data.reshape(r, c))
    raise ParseError(f"{side}: needs 'length' or 'rows' and 'cols'")


def _looks_like_matrix(path: str) -> bool:
    rows = _csv_rows(path)
    return not _has_header(rows[0]) and len({len(r) for r in rows}) == 1 and len(rows[0]) > 1


def read_input(path: str, format: str | None = None,
               column: int | str | None = None) -> Series | Grid:
    """Load a series or grid from ``path`` in one of :data:`FORMATS`.

    Without an explicit format or column, a ``.csv`` file of equal-length
    numeric rows with no header is read as a matrix.
    """
    fmt = format or guess_format(path)
    if format is None and column is None and fmt == "csv-column" and _looks_like_matrix(path):
        fmt = "csv-matrix"
    if fmt == "csv-column":
        return read_csv_column(path, 0 if column is None else column)
    if fmt == "csv-matrix":
        return read_csv_matrix(path)
    if fmt == "whitespace-text":
        return read_whitespace(path)
    if fmt == "raw-f64-le":
        return read_raw(path)
    raise ParseError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def write_data(path: str, data: Series | Grid, format: str | None = None) -> None:
    """Write a series or grid with full float precision."""
    fmt = format or guess_format(path)
    values = np.asarray(data.values)
    if fmt == "raw-f64-le":
        values.astype("<f8").tofile(path)
        meta = {"length": values.size} if values.ndim == 1 else \
            {"rows": values.shape[0], "cols": values.shape[1]}
        with open(path + ".json", "w", encoding="utf-8") as fh:
            fh.write(json.dumps(meta) + "\n")
        return
    if fmt == "csv-column" and values.ndim != 1:
        raise ParseError("csv-column holds 1-d data only; use csv-matrix for grids")
    if fmt == "csv-matrix" and values.ndim != 2:
        raise ParseError("csv-matrix holds 2-d data only")
    if fmt not in FORMATS:
        raise ParseError(f"unknown format {fmt!r}")
    sep = "," if fmt == "csv-matrix" else " "
    rows = values[:, None] if values.ndim == 1 else values
    with open(path, "w", encoding="utf-8") as fh:
        for r in rows:
            fh.write(sep.join(repr(float(v)) for v in r) + "\n")


def _floats(a) -> list[float]:
    return [float(v) for v in np.asarray(a).ravel()]


def estimate_to_dict(est: Estimate) -> dict:
    fit = est.fit
    return {
        "method": est.method,
        "fd": est.fd,
        "scale": est.scale,
        "p": est.p,
        "slope": fit.slope,
        "intercept": fit.intercept,
        "warnings": list(est.warnings),
        "loglog": {
            "s": _floats(fit.s), "y": _floats(fit.y),
            "weights": None if fit.weights is None else _floats(fit.weights),
            "excluded_s": _floats(est.excluded_s), "excluded_y": _floats(est.excluded_y),
        },
    }


def dumps(record: dict) -> str:
    """Serialize a record; floats are written with ``repr`` and so round-trip exactly."""
    return json.dumps(record, indent=2) + "\n"


def write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
