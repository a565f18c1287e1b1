from __future__ import annotations

import pytest

from tlcrystals.temperley_lieb import NoncrossingMatching

# filled in by test_acceptance.py, printed after the run
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def tau1() -> NoncrossingMatching:
    return NoncrossingMatching.parse("[L1-R1, L2-L3, R2-R3]")


@pytest.fixture
def tau2() -> NoncrossingMatching:
    return NoncrossingMatching.parse("[L1-R3, L2-L3, R1-R2]")
