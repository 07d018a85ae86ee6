"""Command line interface: ``fracdim estimate|window|simulate|bootstrap|experiment|plot``.

Results are JSON (``schema_version`` 1). Failures are reported as one JSON
object on standard error; exit codes are 0 ok, 2 usage, 3 data, 4 numeric.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .bootstrap import bootstrap_ci
from .core import Estimate, Grid
from .errors import FracDimError, InvalidParameters, ParseError
from .experiment import StudyConfig, run_study
from .io import (FORMATS, SCHEMA_VERSION, dumps, estimate_to_dict, read_input, write_data,
                 write_text)
from .methods import estimate, parse_method
from .plot import emit_loglog_plot
from .simulate import (FAMILIES, ContaminationSpec, CovarianceModel, contaminate, derive_seed,
                       simulate_1d, simulate_2d)
from .windowing import WindowSpec, sliding_estimates, trace_rows


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit_error(code: str, message: str, exit_code: int, **extra) -> int:
    doc = {"error": code, "message": message, "exit_code": exit_code, **extra}
    sys.stderr.write(json.dumps(doc) + "\n")
    return exit_code


def _run_method(data, method):
    try:
        return estimate(data, method)
    except FracDimError as exc:
        exc.method = str(method)
        raise


def _methods(args, data) -> list:
    names = args.method or (["transect.var"] if isinstance(data, Grid) else ["madogram"])
    return [parse_method(m) for m in names]


def _record(args, **body) -> dict:
    return {"schema_version": SCHEMA_VERSION, "input": getattr(args, "input", None), **body}


def _bootstrap_dict(res) -> dict:
    return {"method": res.point.method, "level": res.level, "lower": res.lower,
            "upper": res.upper, "replicates": res.replicates, "failures": res.failures,
            "alpha": res.model.alpha, "c": res.model.c, "warnings": list(res.warnings),
            "boot_estimates": [float(v) for v in res.boot_estimates]}


def cmd_estimate(args) -> dict:
    data = read_input(args.input, args.format, args.column)
    specs = _methods(args, data)
    ests = [_run_method(data, m) for m in specs]
    rec = _record(args, estimates=[estimate_to_dict(e) for e in ests])
    if args.boot:
        rec["bootstrap"] = [_bootstrap_dict(bootstrap_ci(data, m, args.boot, args.level,
                                                         args.seed, args.workers))
                            for m in specs]
    if args.plot:
        emit_loglog_plot(ests, args.plot)
    return rec


def cmd_window(args) -> dict:
    data = read_input(args.input, args.format, args.column)
    if isinstance(data, Grid):
        raise ParseError("sliding windows need 1-d input but got a 2-d grid")
    spec = WindowSpec(args.window, args.step, tuple(_methods(args, data)))
    records = sliding_estimates(data, spec, workers=args.workers)
    trace = []
    for rec in records:
        row = {"start": rec.start, "midpoint": rec.midpoint, "results": {}}
        for name, res in rec.results.items():
            row["results"][name] = ({"fd": res.fd, "warnings": list(res.warnings)}
                                    if isinstance(res, Estimate)
                                    else {"error": res.code, "message": res.message})
        trace.append(row)
    if args.trace:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["midpoint", "method", "fd", "error"])
        for mid, name, fd, err in trace_rows(records):
            w.writerow([mid, name, "" if fd is None else repr(fd), err or ""])
        write_text(args.trace, buf.getvalue())
    return _record(args, window={"width": spec.width, "step": spec.step}, trace=trace)


def cmd_simulate(args) -> None:
    model = CovarianceModel(args.family, args.alpha, args.c, args.tau)
    if args.dim == 1:
        data = simulate_1d(model, args.n, derive_seed(args.seed, "simulate"))
    else:
        data = simulate_2d(model, args.n, args.n2, derive_seed(args.seed, "simulate"))
    if args.outliers:
        data = contaminate(data, ContaminationSpec(args.outliers, args.outlier_sd),
                           derive_seed(args.seed, "outliers"))
    fmt = args.format or ("csv-matrix" if args.dim == 2 and args.out.endswith(".csv") else None)
    write_data(args.out, data, fmt)


def cmd_bootstrap(args) -> dict:
    data = read_input(args.input, args.format, args.column)
    method = (args.method or ["madogram"])[0]
    res = bootstrap_ci(data, method, args.boot, args.level, args.seed, args.workers)
    return _record(args, point=estimate_to_dict(res.point), bootstrap=_bootstrap_dict(res))


def cmd_experiment(args) -> None:
    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = StudyConfig.from_dict(json.load(fh))
    except OSError as exc:
        raise ParseError(f"cannot read {args.config}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{args.config}: invalid JSON ({exc.msg})") from None
    except TypeError as exc:
        raise InvalidParameters(f"{args.config}: {exc}") from None
    res = run_study(cfg, workers=args.workers)
    write_text(args.out + ".csv", res.to_csv())
    write_text(args.out + ".json", res.to_json())


def cmd_plot(args) -> None:
    try:
        with open(args.record, encoding="utf-8") as fh:
            record = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {args.record}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{args.record}: invalid JSON ({exc.msg})") from None
    emit_loglog_plot(record, args.out)


def _input_args(p):
    p.add_argument("input", help="data file")
    p.add_argument("--format", choices=FORMATS, help="input format (default: from extension)")
    p.add_argument("--column", help="CSV column index or header name (default: first)")


def _method_arg(p):
    p.add_argument("--method", action="append", metavar="SPEC",
                   help="estimator, e.g. madogram, variation:p=1.5:diff=2 (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fracdim", description="Fractal dimension estimation.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("estimate", help="estimate the dimension of a series or grid")
    _input_args(p)
    _method_arg(p)
    p.add_argument("--boot", type=int, default=0, metavar="B", help="add bootstrap intervals")
    p.add_argument("--level", type=float, default=0.90)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", metavar="PATH", help="write a log-log SVG")
    p.add_argument("--out", help="output JSON (default: stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("window", help="sliding-block estimates along a profile")
    _input_args(p)
    _method_arg(p)
    p.add_argument("--window", "--width", dest="window", type=int, default=1024)
    p.add_argument("--step", type=int, default=10)
    p.add_argument("--trace", metavar="CSV", help="also write a (midpoint, method, fd) CSV")
    p.add_argument("--out", help="output JSON (default: stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("simulate", help="simulate a Gaussian path or field")
    p.add_argument("--family", choices=FAMILIES, default="powered_exponential")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--tau", type=float)
    p.add_argument("--n", type=int, default=1024, help="intervals per axis (n+1 samples)")
    p.add_argument("--n2", type=int, help="second axis for 2-d (default: n)")
    p.add_argument("--dim", type=int, choices=(1, 2), default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--outliers", type=int, default=0, metavar="K")
    p.add_argument("--outlier-sd", type=float, default=0.1)
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bootstrap", help="parametric bootstrap interval")
    _input_args(p)
    _method_arg(p)
    p.add_argument("--boot", type=int, default=200, metavar="B")
    p.add_argument("--level", type=float, default=0.90)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output JSON (default: stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bootstrap)

    p = sub.add_parser("experiment", help="run a Monte Carlo study from a JSON config")
    p.add_argument("config")
    p.add_argument("--out", required=True, metavar="PREFIX", help="writes PREFIX.csv and PREFIX.json")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("plot", help="log-log SVG from a JSON record")
    p.add_argument("record")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        rec = args.func(args)
        if rec is not None:
            write_text(getattr(args, "out", None), dumps(rec))
        return 0
    except UsageError as exc:
        return _emit_error("usage", str(exc), 2)
    except FracDimError as exc:
        extra = {"method": exc.method} if hasattr(exc, "method") else {}
        return _emit_error(exc.code, str(exc), exc.exit_code, **extra)
    except OSError as exc:
        return _emit_error("io_error", str(exc), 3)


if __name__ == "__main__":
    sys.exit(main())
