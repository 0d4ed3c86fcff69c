from __future__ import annotations

import re

_ACCEPTANCE: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    match = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if not match:
        return
    key = (int(match.group(1)), match.group(2))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), outcome in sorted(_ACCEPTANCE.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}  {name.replace('_', ' ')}")
