import itertools

import numpy as np
import pytest

from logq.encoding import EncodingSpec, Kind
from logq.graph import Graph, gnp_random_graph
from logq.laplacian import build_laplacian, cut_value
from logq.oracle import OracleTooLargeError, brute_force_maxcut
from logq.state import cost_closed_form

from conftest import edge_sum_cut, random_weighted_graph


def test_four_vertex(g4):
    value, x = brute_force_maxcut(g4)
    assert value == 15
    assert list(x) == [1, -1, 1, -1]


def test_edgeless():
    value, x = brute_force_maxcut(Graph(5))
    assert value == 0 and list(x) == [1] * 5


def test_triangle():
    value, x = brute_force_maxcut(Graph(3, ((0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0))))
    assert value == 2
    # lowest index with the maximum: vertex 1 alone on the -1 side
    assert list(x) == [1, -1, 1]


def test_refuses_large():
    with pytest.raises(OracleTooLargeError):
        brute_force_maxcut(gnp_random_graph(30, 0.3, 0))


def test_matches_naive_enumeration(rng):
    for n in (2, 5, 8, 11):
        g = random_weighted_graph(rng, n)
        naive = max(edge_sum_cut(g, x) for x in itertools.product((1, -1), repeat=n))
        value, x = brute_force_maxcut(g)
        assert value == naive
        assert x[0] == 1
        assert cut_value(g, x) == value
        assert cut_value(g, -x) == value


def test_binary_configurations_match_cost(rng):
    step = EncodingSpec(Kind.STEP)
    for n in (3, 6, 12):
        g = random_weighted_graph(rng, n, 0.4)
        L = build_laplacian(g)
        for bits in itertools.islice(itertools.product((0, 1), repeat=n), 200):
            r = np.zeros(L.dim)
            r[:n] = bits
            theta = np.where(r == 1, 1.5 * np.pi, 0.5 * np.pi)
            x = np.where(r[:n] == 0, 1, -1)
            assert abs(-cost_closed_form(theta, step, L) - cut_value(g, x)) < 1e-9
