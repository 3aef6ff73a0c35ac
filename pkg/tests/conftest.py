import pytest

from catalania.root_ideal import RootIdeal

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def ex_n6():
    """The n = 6 ideal with rows (4, 4, 1)."""
    return RootIdeal(6, (4, 4, 1))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
