import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[str, tuple[str, float]] = {}


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False, help="run size-7 and size-8 sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    label = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        prev = _acceptance.get(label)
        if prev is None or prev[0] == "passed":
            _acceptance[label] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    key = lambda name: (int(re.search(r"criterion_(\d+)", name).group(1)), name)
    for name in sorted(_acceptance, key=key):
        outcome, duration = _acceptance[name]
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")
