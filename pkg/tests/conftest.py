"""Shared fixtures: collect acceptance-criterion verdicts and echo them in a
terminal summary section after the run."""

import pytest


def pytest_configure(config):
    config._criterion_lines = []


@pytest.fixture
def criterion(request):
    """Return a recorder that logs one PASS/FAIL line and asserts the verdict."""

    def record(num: int, description: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        line = f"{status} criterion {num}: {description}"
        if detail:
            line += f" [{detail}]"
        request.config._criterion_lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criterion_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
