"""Monte Carlo studies of estimator bias and RMSE.

Every replicate draws one path per (model, n) cell and hands the same path to
all estimators, so estimator comparisons within a cell are paired. Seeds are
derived from the master seed, the cell and the replicate index, which makes
the result independent of the evaluation order and of the worker count.
"""
from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import FracDimError, InvalidParameters
from .methods import estimate, parse_method
from .parallel import ordered_map
from .simulate import (ContaminationSpec, CovarianceModel, contaminate, derive_seed,
                       simulate_1d, simulate_2d)

CSV_COLUMNS = ("family", "alpha", "c", "tau", "n", "estimator", "truth", "replicates",
               "failures", "mean", "bias", "sd", "rmse", "mcse")


@dataclass(frozen=True)
class StudyConfig:
    family: str = "powered_exponential"
    alphas: tuple = (1.0,)
    c: float = 1.0
    tau: float | None = None
    ns: tuple = (1024,)
    estimators: tuple = ("madogram",)
    replicates: int = 100
    contamination: ContaminationSpec | None = None
    seed: int = 0
    dim: int = 1

    def __post_init__(self):
        for name in ("alphas", "ns", "estimators"):
            val = getattr(self, name)
            object.__setattr__(self, name, (val,) if isinstance(val, (int, float, str)) else tuple(val))
        if self.dim not in (1, 2):
            raise InvalidParameters("dim must be 1 or 2")
        if int(self.replicates) != self.replicates or self.replicates < 1:
            raise InvalidParameters("replicates must be an integer >= 1")
        if not self.alphas or not self.ns or not self.estimators:
            raise InvalidParameters("alphas, ns and estimators must be non-empty")
        if any(int(n) != n or n < 2 for n in self.ns):
            raise InvalidParameters("sample sizes must be integers >= 2")
        for m in self.estimators:
            if parse_method(m).dim != self.dim:
                raise InvalidParameters(f"estimator {m!r} does not match dim = {self.dim}")
        for model in self.models:
            if self.dim == 2 and not model.stationary:
                raise InvalidParameters("2-d studies need a stationary family")
        if isinstance(self.contamination, dict):
            object.__setattr__(self, "contamination", ContaminationSpec(**self.contamination))

    @property
    def models(self) -> list[CovarianceModel]:
        return [CovarianceModel(self.family, float(a), float(self.c), self.tau)
                for a in self.alphas]

    def truth(self, alpha: float) -> float:
        return self.dim + 1.0 - alpha / 2.0

    def to_dict(self) -> dict:
        cont = self.contamination
        return {
            "family": self.family, "alphas": list(self.alphas), "c": self.c, "tau": self.tau,
            "ns": list(self.ns), "estimators": list(self.estimators),
            "replicates": self.replicates,
            "contamination": None if cont is None else {"count": cont.count, "sd": cont.sd},
            "seed": self.seed, "dim": self.dim,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StudyConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(d) - known
        if unknown:
            raise InvalidParameters(f"unknown study config field(s) {sorted(unknown)}")
        return cls(**d)


@dataclass(frozen=True)
class CellResult:
    family: str
    alpha: float
    c: float
    tau: float | None
    n: int
    estimator: str
    truth: float
    replicates: int   # effective R after failures
    failures: int
    mean: float
    bias: float
    sd: float         # population standard deviation (ddof = 0)
    rmse: float
    mcse: float       # Monte Carlo standard error of the mean

    def row(self) -> list:
        return [getattr(self, k) for k in CSV_COLUMNS]


@dataclass(frozen=True, eq=False)
class StudyResult:
    config: StudyConfig
    cells: list[CellResult]
    raw: dict = field(default_factory=dict)  # (alpha, n) -> (R, n_estimators) array

    def cell(self, estimator: str, alpha: float | None = None, n: int | None = None) -> CellResult:
        name = str(parse_method(estimator))
        for c in self.cells:
            if c.estimator == name and (alpha is None or c.alpha == alpha) and (n is None or c.n == n):
                return c
        raise KeyError((estimator, alpha, n))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for c in self.cells:
            w.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v)
                        for v in c.row()])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"schema_version": 1, "config": self.config.to_dict(),
               "cells": [dict(zip(CSV_COLUMNS, c.row())) for c in self.cells]}
        return json.dumps(doc, indent=2, allow_nan=True) + "\n"


def summarize(values: np.ndarray, truth: float) -> dict:
    """Mean, bias, population sd, RMSE and Monte Carlo SE over the finite entries."""
    v = values[np.isfinite(values)]
    R = v.size
    if R == 0:
        nan = float("nan")
        return dict(replicates=0, mean=nan, bias=nan, sd=nan, rmse=nan, mcse=nan)
    mean = float(np.mean(v))
    var = float(np.mean((v - mean) ** 2))
    bias = mean - truth
    return dict(replicates=R, mean=mean, bias=bias, sd=float(np.sqrt(var)),
                rmse=float(np.sqrt(bias * bias + var)), mcse=float(np.sqrt(var / R)))


def _replicate(args) -> np.ndarray:
    model, n, rep, cfg = args
    cell = (model.family, model.alpha, model.c, model.tau, n)
    sim_seed = derive_seed(cfg.seed, "sim", *cell, rep)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        if cfg.dim == 1:
            data = simulate_1d(model, n, sim_seed)
        else:
            data = simulate_2d(model, n, n, sim_seed)
    if cfg.contamination is not None:
        data = contaminate(data, cfg.contamination, derive_seed(cfg.seed, "outliers", *cell, rep))
    out = np.full(len(cfg.estimators), np.nan)
    for k, m in enumerate(cfg.estimators):
        try:
            out[k] = estimate(data, m).fd
        except FracDimError:
            pass
    return out


def run_study(cfg: StudyConfig, workers: int = 1) -> StudyResult:
    """Run every (model, n) cell for ``cfg.replicates`` replicates."""
    names = [str(parse_method(m)) for m in cfg.estimators]
    tasks = [(model, int(n), rep, cfg)
             for model in cfg.models for n in cfg.ns for rep in range(cfg.replicates)]
    rows = ordered_map(_replicate, tasks, workers)
    R = cfg.replicates
    cells, raw = [], {}
    for i, (model, n) in enumerate((m, n) for m in cfg.models for n in cfg.ns):
        block = np.array(rows[i * R:(i + 1) * R]).reshape(R, len(names))
        raw[(model.alpha, int(n))] = block
        truth = cfg.truth(model.alpha)
        for k, name in enumerate(names):
            stats = summarize(block[:, k], truth)
            cells.append(CellResult(model.family, model.alpha, model.c, model.tau, int(n),
                                    name, truth, failures=R - stats["replicates"], **stats))
    return StudyResult(cfg, cells, raw)
