"""Shared helpers and the per-criterion summary printed at the end of a run."""

from __future__ import annotations

from fractions import Fraction

import pytest

# filled by tests/test_acceptance.py through record()
ACCEPTANCE: dict[int, tuple[bool, str]] = {}

GRID = [Fraction(k, 4) for k in range(-8, 9)]


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def grid():
    return GRID
