import pytest

from krobust import constructions
from krobust.graph import Graph


@pytest.fixture
def c4():
    return constructions.cycle(4)


@pytest.fixture
def c5():
    return constructions.cycle(5)


@pytest.fixture
def c6():
    return constructions.cycle(6)


@pytest.fixture
def p3():
    return constructions.path(3)


@pytest.fixture
def k4():
    return constructions.clique(4)


@pytest.fixture
def triangle_pendant():
    return Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import REPORT

    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
