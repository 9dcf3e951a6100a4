import pytest

from polycontract.catalog import get_operator, get_space


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def hexagon():
    return get_space("hexagon")


@pytest.fixture
def octagon():
    return get_space("octagon")


@pytest.fixture
def linf2():
    return get_space("linf2")


@pytest.fixture
def ex1():
    return get_operator("ex1")
