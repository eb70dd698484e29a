import os
import sys

import pytest

from k1rfactors.graph import complete_graph, copies, cycle_graph, path_graph

sys.path.insert(0, os.path.dirname(__file__))

from strategies import net_graph  # noqa: E402


@pytest.fixture
def net():
    return net_graph()


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def two_k2():
    return copies(complete_graph(2), 2)
