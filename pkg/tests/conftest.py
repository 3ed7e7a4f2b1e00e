from __future__ import annotations

from pathlib import Path

import pytest

from tr2dom.solvers import available_backends, current_backend, set_backend

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture(params=available_backends())
def backend(request):
    """Run the test once per importable search kernel."""
    before = current_backend()
    set_backend(request.param)
    yield request.param
    set_backend(before)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
