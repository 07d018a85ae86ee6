"""Log-log diagnostic plots as self-contained SVG.

Points used in the fit are drawn filled, excluded points hollow, with the
fitted line and the estimate written in each panel.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .core import Estimate
from .errors import IoError
from .io import estimate_to_dict

PANEL_W, PANEL_H = 360, 280
MARGIN = 48


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _panel(est: dict, x0: float) -> list[str]:
    ll = est["loglog"]
    used = list(zip(ll["s"], ll["y"]))
    excl = list(zip(ll["excluded_s"], ll["excluded_y"]))
    pts = used + excl
    ss = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    smin, smax = min(ss), max(ss)
    ymin, ymax = min(ys), max(ys)
    if smax == smin:
        smin, smax = smin - 1, smax + 1
    if ymax == ymin:
        ymin, ymax = ymin - 1, ymax + 1
    pad_s, pad_y = 0.05 * (smax - smin), 0.05 * (ymax - ymin)
    smin, smax, ymin, ymax = smin - pad_s, smax + pad_s, ymin - pad_y, ymax + pad_y
    left, top = x0 + MARGIN, MARGIN / 2
    w, h = PANEL_W - 1.5 * MARGIN, PANEL_H - 1.5 * MARGIN

    def X(s):
        return left + (s - smin) / (smax - smin) * w

    def Y(y):
        return top + (ymax - y) / (ymax - ymin) * h

    out = [f'<rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(w)}" height="{_fmt(h)}" '
           'fill="none" stroke="#444"/>']
    a, b = est["intercept"], est["slope"]
    out.append(f'<line x1="{_fmt(X(smin))}" y1="{_fmt(Y(a + b * smin))}" x2="{_fmt(X(smax))}" '
               f'y2="{_fmt(Y(a + b * smax))}" stroke="#1f77b4" stroke-width="1.5"/>')
    for s, y in used:
        out.append(f'<circle class="used" cx="{_fmt(X(s))}" cy="{_fmt(Y(y))}" r="3.5" '
                   'fill="black" stroke="black"/>')
    for s, y in excl:
        out.append(f'<circle class="excluded" cx="{_fmt(X(s))}" cy="{_fmt(Y(y))}" r="3.5" '
                   'fill="white" stroke="black"/>')
    label = f'{est["method"]}: fd = {est["fd"]:.4f}'
    out.append(f'<text x="{_fmt(left + 6)}" y="{_fmt(top + 16)}" font-size="13" '
               f'font-family="sans-serif">{escape(label)}</text>')
    out.append(f'<text x="{_fmt(left + w / 2)}" y="{_fmt(top + h + 30)}" font-size="11" '
               'text-anchor="middle" font-family="sans-serif">log scale</text>')
    return out


def loglog_svg(estimates) -> str:
    """SVG document with one log-log panel per estimate (``Estimate`` or record dict)."""
    ests = [estimate_to_dict(e) if isinstance(e, Estimate) else e for e in estimates]
    ests = [e for e in ests if e.get("loglog") and e["loglog"]["s"]]
    if not ests:
        raise IoError("nothing to plot: the record has no log-log points")
    for e in ests:
        vals = e["loglog"]["s"] + e["loglog"]["y"] + [e["slope"], e["intercept"]]
        if not all(math.isfinite(v) for v in vals):
            raise IoError(f"non-finite log-log data for {e['method']}")
    width = PANEL_W * len(ests)
    body = []
    for k, e in enumerate(ests):
        body += _panel(e, k * PANEL_W)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{PANEL_H}" '
            f'viewBox="0 0 {width} {PANEL_H}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body,
                      "</svg>"]) + "\n"


def record_estimates(record: dict) -> list[dict]:
    """Estimate dicts held by a CLI output record."""
    if "estimates" in record:
        return [e for e in record["estimates"] if "loglog" in e]
    if "point" in record:
        return [record["point"]]
    return []


def emit_loglog_plot(record, path: str) -> None:
    """Write the log-log plot for ``record`` (a CLI record dict or list of estimates)."""
    ests = record_estimates(record) if isinstance(record, dict) else list(record)
    svg = loglog_svg(ests)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror}") from None
