import random

import pytest

from graphmod.graph import Graph


def gnp(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)
