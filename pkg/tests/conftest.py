import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import refdata
from walkmat import Graph, VertexSet, from_edge_list


@pytest.fixture(scope="session")
def paw():
    return from_edge_list(4, refdata.PAW_EDGES)


@pytest.fixture(scope="session")
def paw_sets(paw):
    return {"V": VertexSet.full(4),
            1: VertexSet.of(4, [1]),
            2: VertexSet.of(4, [2]),
            3: VertexSet.of(4, [3]),
            4: VertexSet.of(4, [4])}


@pytest.fixture(scope="session")
def mates8():
    g1 = Graph(8, tuple(tuple(r) for r in refdata.MATES8_A1))
    g2 = Graph(8, tuple(tuple(r) for r in refdata.MATES8_A2))
    return g1, g2
