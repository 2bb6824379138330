import numpy as np
import pytest

from logq.graph import Graph, four_vertex_graph


@pytest.fixture
def g4():
    return four_vertex_graph()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_weighted_graph(rng, n, density=0.5):
    edges = [
        (u, v, float(rng.integers(1, 10)))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < density
    ]
    return Graph(n, tuple(edges))


def edge_sum_cut(g, x):
    """Cut weight straight from the edge list."""
    return sum(w for u, v, w in g.edges if x[u] != x[v])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
