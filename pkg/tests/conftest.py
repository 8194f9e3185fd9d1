from __future__ import annotations

import os

import pytest

from nichols_forge.fixtures import builtin

LONG = bool(os.environ.get("NICHOLS_FORGE_LONG"))

DESK_FIXTURES = ("O2_3_minus", "O2_4_minus", "O2_4_chi", "O4_4_minus")


def pytest_collection_modifyitems(config, items):
    if LONG:
        return
    skip = pytest.mark.skip(reason="set NICHOLS_FORGE_LONG=1 to run")
    for item in items:
        if "long_running" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(params=DESK_FIXTURES)
def desk_cocycle(request):
    return builtin(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    lines = list(lines)
    if not any(line.startswith("criterion 10:") for line in lines):
        lines.append("criterion 10: SKIPPED - full n=5 run not executed (gated behind NICHOLS_FORGE_LONG=1)")
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=_criterion_key):
        terminalreporter.write_line(line)


def _criterion_key(line: str):
    head = line.split()[1]
    num = "".join(ch for ch in head if ch.isdigit())
    return (int(num) if num else 99, "-" in head, line)
