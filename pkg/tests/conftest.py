import pytest

from noetherpairs.poly import Ring


@pytest.fixture
def xy():
    return Ring(("x", "y"))


@pytest.fixture
def x01():
    return Ring(("x0", "x1"))


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
