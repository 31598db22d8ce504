import pytest

from src.models import Graph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow acceptance tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running acceptance check, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def edge2():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def c5():
    return Graph.cycle(5)


@pytest.fixture
def c5_code():
    # 00000, 11010, 10110, 10101, 01101, 01011 with bit k at character k
    return (0, 11, 13, 21, 22, 26)
