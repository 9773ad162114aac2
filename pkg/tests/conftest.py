import pytest

from bpbw.catalog import BUILTIN_NAMES, SHIPPING_NAMES, load_builtin

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalog():
    return {name: load_builtin(name).presentation for name in BUILTIN_NAMES}


@pytest.fixture(params=SHIPPING_NAMES)
def shipping(request, catalog):
    return catalog[request.param]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
