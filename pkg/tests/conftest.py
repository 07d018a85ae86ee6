import os
import sys
from collections import OrderedDict

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA: "OrderedDict[int, list]" = OrderedDict()


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    k = marker.args[0]
    ok = call.excinfo is None
    detail = "; ".join(v for name, v in item.user_properties if name == "detail")
    _CRITERIA.setdefault(k, []).append((item.name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        runs = _CRITERIA[k]
        ok = all(r[1] for r in runs)
        failed = [r for r in runs if not r[1]]
        shown = failed if failed else runs
        detail = " | ".join(f"{r[0]}: {r[2]}" if r[2] else r[0] for r in shown)
        tr.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
