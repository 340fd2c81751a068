import pytest

from resgraph.catalog import CATALOG

NEGDEF = [name for name in CATALOG if name != "nonnegdef"]
ELLIPTIC = ["simple-elliptic-deg1", "laufer-chain", "cusp-triangle"]


@pytest.fixture
def laufer():
    return CATALOG["laufer-chain"].graph


@pytest.fixture
def a1():
    return CATALOG["A1"].graph


@pytest.fixture
def e8():
    return CATALOG["E8"].graph


@pytest.fixture
def highpg():
    return CATALOG["genus2-deg2"].graph


@pytest.fixture
def simple_elliptic():
    return CATALOG["simple-elliptic-deg1"].graph


@pytest.fixture
def triangle():
    return CATALOG["cusp-triangle"].graph


def graph(name):
    return CATALOG[name].graph


ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
