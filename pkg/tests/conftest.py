import pytest

from symdual.arrangement import PolarizedArrangement
from symdual.fixtures import fixture_set

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rp():
    """Two points on a line: x = 0 and x = 1, objective x."""
    return PolarizedArrangement([[1, -1]], ["0", "1"], ["1"])


@pytest.fixture
def u23():
    return PolarizedArrangement([[1, 0, -1], [0, 1, -1]], [0, 0, 1], [1, 2])


@pytest.fixture
def single():
    return PolarizedArrangement([[1]], [0], [1])


@pytest.fixture(scope="session")
def fixtures():
    return fixture_set()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
