"""Shared test configuration: the acceptance-criteria registry.

test_acceptance.py records one verdict per criterion; the registry prints a
single pass/fail line for each at the end of the run so the acceptance
status is readable without scrolling through pytest output.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

_RESULTS: dict[int, tuple[str, bool, str]] = {}


def record_criterion(num: int, title: str, passed: bool, detail: str = "") -> None:
    _RESULTS[num] = (title, passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_RESULTS):
        title, passed, detail = _RESULTS[num]
        status = "PASS" if passed else "FAIL"
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {title}{suffix}")
