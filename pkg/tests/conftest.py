import time

import pytest

from helpers import ACCEPTANCE

SUITE_BUDGET_S = 120.0
_start = time.perf_counter()
_elapsed = {}


@pytest.hookimpl(tryfirst=True)
def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _start
    _elapsed["s"] = elapsed
    no_floats = [ok for n, ok, _ in ACCEPTANCE if n == 11]
    if no_floats and elapsed >= SUITE_BUDGET_S and session.exitstatus == 0:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    elapsed = _elapsed.get("s", time.perf_counter() - _start)
    tr = terminalreporter
    tr.write_sep("=", "acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        if num == 11:
            in_budget = elapsed < SUITE_BUDGET_S
            ok = ok and in_budget
            detail = f"{detail}; suite wall-clock {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s)"
        tr.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
