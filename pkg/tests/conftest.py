import pytest

from fillingcurves.io import load_fixture

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def genus2_248():
    return load_fixture("genus2_type248")


@pytest.fixture(scope="session")
def table_rows():
    return [load_fixture(f"type2412_row{i}") for i in range(1, 7)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
