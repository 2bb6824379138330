"""Graph Laplacian padded to a power-of-two dimension."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph


def n_qubits_for(n: int) -> int:
    """Qubits needed to index ``n`` vertices; a single vertex still gets one qubit."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return max(1, math.ceil(math.log2(n)))


@dataclass(frozen=True)
class LaplacianMatrix:
    matrix: np.ndarray
    n_original: int

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_qubits(self) -> int:
        return self.dim.bit_length() - 1

    def to_csv(self) -> str:
        return "".join(",".join(f"{x:g}" for x in row) + "\n" for row in self.matrix)


def build_laplacian(g: Graph) -> LaplacianMatrix:
    """Weighted degree on the diagonal, ``-w`` off-diagonal, zero-padded to ``2**N``."""
    dim = 2 ** n_qubits_for(g.n_vertices)
    L = np.zeros((dim, dim))
    u, v, w = g.edge_arrays()
    L[u, v] -= w
    L[v, u] -= w
    np.add.at(L, (u, u), w)
    np.add.at(L, (v, v), w)
    L.setflags(write=False)
    return LaplacianMatrix(L, g.n_vertices)


def cut_value(g: Graph, x) -> float:
    """Cut weight of a +-1 assignment, computed as ``x^T L x / 4``."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n_vertices,):
        raise ValueError(f"assignment has length {x.size}, graph has {g.n_vertices} vertices")
    if not np.all(np.abs(x) == 1):
        raise ValueError("assignment entries must be +1 or -1")
    L = build_laplacian(g).matrix[: g.n_vertices, : g.n_vertices]
    return float(x @ L @ x) / 4.0
