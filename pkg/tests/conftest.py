from __future__ import annotations

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion, then assert it."""

    def record(number: int, title: str, failures: list[str]) -> None:
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {number:2d} {status}  {title}"
        if failures:
            line += "  [" + "; ".join(failures[:5]) + "]"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert not failures, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
