#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

import pytest

from hashtag_drift.community import FrozenGraph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="Run the long acceptance checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long running acceptance checks, enabled with --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def barbell():
    """Triangles abc and def joined by the bridge c-d"""
    return FrozenGraph.from_edges([("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"),
                                   ("d", "e"), ("d", "f"), ("e", "f")])


@pytest.fixture
def path_abc():
    return FrozenGraph.from_edges([("a", "b"), ("b", "c")])
