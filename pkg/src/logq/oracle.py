"""Exhaustive MaxCut for small graphs."""

from __future__ import annotations

import numpy as np

from .graph import Graph

MAX_VERTICES = 24
_CHUNK = 1 << 16


class OracleTooLargeError(ValueError):
    pass


def brute_force_maxcut(g: Graph) -> tuple[float, np.ndarray]:
    """Best cut over all ``2^(n-1)`` assignments with vertex 0 pinned to +1.

    Assignment index ``i`` puts vertex ``k >= 1`` on the -1 side when bit
    ``k - 1`` of ``i`` is set. Ties go to the lowest index. The cut weight is
    summed edge by edge, independently of the Laplacian.
    """
    n = g.n_vertices
    if n > MAX_VERTICES:
        raise OracleTooLargeError(f"brute force refuses n={n} > {MAX_VERTICES}")
    u, v, w = g.edge_arrays()
    total = 1 << (n - 1)
    shifts = np.arange(n - 1, dtype=np.int64)
    best_val, best_idx = -np.inf, 0
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        side = np.zeros((idx.size, n), dtype=bool)
        side[:, 1:] = (idx[:, None] >> shifts) & 1
        vals = (side[:, u] != side[:, v]) @ w if w.size else np.zeros(idx.size)
        k = int(np.argmax(vals))
        if vals[k] > best_val:
            best_val, best_idx = float(vals[k]), int(idx[k])
    x = np.ones(n, dtype=int)
    for k in range(1, n):
        if (best_idx >> (k - 1)) & 1:
            x[k] = -1
    return best_val, x
