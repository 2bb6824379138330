import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logq.graph import Graph
from logq.laplacian import build_laplacian, cut_value, n_qubits_for

from conftest import edge_sum_cut, random_weighted_graph

FOUR_VERTEX_L = [[4, -3, -1, 0], [-3, 11, -8, 0], [-1, -8, 13, -4], [0, 0, -4, 4]]


def test_four_vertex_laplacian(g4):
    L = build_laplacian(g4)
    assert L.dim == 4 and L.n_qubits == 2 and L.n_original == 4
    np.testing.assert_array_equal(L.matrix, FOUR_VERTEX_L)


def test_single_edge():
    L = build_laplacian(Graph(2, ((0, 1, 2.5),)))
    np.testing.assert_array_equal(L.matrix, [[2.5, -2.5], [-2.5, 2.5]])


def test_path_padding():
    L = build_laplacian(Graph(3, ((0, 1, 1.0), (1, 2, 1.0))))
    expected = np.array([[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 1, 0], [0, 0, 0, 0]])
    np.testing.assert_array_equal(L.matrix, expected)


@pytest.mark.parametrize("n, N", [(1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (50, 6), (128, 7), (129, 8), (256, 8)])
def test_qubit_count(n, N):
    assert n_qubits_for(n) == N


def test_laplacian_invariants(rng):
    for n in (3, 5, 9, 16):
        g = random_weighted_graph(rng, n)
        M = build_laplacian(g).matrix
        np.testing.assert_array_equal(M, M.T)
        np.testing.assert_allclose(M[:n, :n].sum(axis=1), 0.0, atol=1e-12)
        assert not M[n:].any() and not M[:, n:].any()
        deg = np.zeros(n)
        for u, v, w in g.edges:
            deg[u] += w
            deg[v] += w
        np.testing.assert_array_equal(np.diag(M)[:n], deg)


def test_cut_value_examples(g4):
    assert cut_value(g4, [1, -1, 1, -1]) == 15
    assert cut_value(g4, [1, 1, 1, 1]) == 0
    assert cut_value(g4, [1, 1, -1, -1]) == 9


def test_cut_value_rejects_bad_input(g4):
    with pytest.raises(ValueError):
        cut_value(g4, [1, -1, 1])
    with pytest.raises(ValueError):
        cut_value(g4, [1, 0, 1, 1])


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**31 - 1))
def test_quadratic_form_equals_edge_sum(n, seed):
    rng = np.random.default_rng(seed)
    g = random_weighted_graph(rng, n)
    L = build_laplacian(g).matrix[:n, :n]
    for bits in itertools.islice(itertools.product((1, -1), repeat=n), 64):
        x = np.array(bits)
        half_sum = sum(w * (1 - x[u] * x[v]) / 2 for u, v, w in g.edges)
        assert abs(cut_value(g, x) - half_sum) < 1e-9
        assert abs(half_sum - edge_sum_cut(g, x)) < 1e-9
        assert x @ L @ x >= 0
