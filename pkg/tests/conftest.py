from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_LINES: list[str] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("METABICAY_SLOW"):
        return
    skip = pytest.mark.skip(reason="long-running tier; set METABICAY_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
