"""Weighted undirected graphs: edge-list parsing and seeded G(n, p) generation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GraphParseError(ValueError):
    """Raised when an edge-list file is malformed. Carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph with canonical ``(u, v, w)`` edges, ``u < v``."""

    n_vertices: int
    edges: tuple[tuple[int, int, float], ...] = ()

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("a graph needs at least one vertex")
        canon = []
        seen = set()
        for u, v, w in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n_vertices}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            canon.append((u, v, float(w)))
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_arrays(self):
        """Return ``(u, v, w)`` as numpy arrays."""
        if not self.edges:
            return np.zeros(0, int), np.zeros(0, int), np.zeros(0)
        u, v, w = zip(*self.edges)
        return np.array(u), np.array(v), np.array(w, dtype=float)

    def to_edge_list(self) -> str:
        lines = [f"{self.n_vertices} {self.n_edges}"]
        lines += [f"{u} {v} {w:g}" for u, v, w in self.edges]
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v w``.

    Vertices are 0-based. Lines starting with ``#`` and blank lines are skipped.
    """
    header = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphParseError(lineno, f"expected header 'n m', got {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError(lineno, f"non-integer header {line!r}") from None
            if n < 1 or m < 0:
                raise GraphParseError(lineno, "header needs n >= 1 and m >= 0")
            header = (n, m)
            continue
        n, m = header
        if len(parts) != 3:
            raise GraphParseError(lineno, f"expected 'u v w', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2])
        except ValueError:
            raise GraphParseError(lineno, f"cannot parse edge {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"vertex index out of range [0, {n})")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(lineno, f"duplicate edge {key} (first seen on line {seen[key]})")
        seen[key] = lineno
        edges.append((u, v, w))
    if header is None:
        raise GraphParseError(0, "empty edge list")
    n, m = header
    if len(edges) != m:
        raise GraphParseError(lineno, f"header announces {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def gnp_random_graph(n: int, density: float, seed: int, weight: float = 1.0) -> Graph:
    """Erdos-Renyi G(n, p) graph.

    Every unordered pair ``(u, v)``, ``u < v``, is visited in lexicographic
    order and kept when a uniform draw from numpy's PCG64 generator seeded
    with ``seed`` falls below ``density``. One draw per pair, so the graph
    is a pure function of ``(n, density, seed)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < density
    return Graph(n, tuple((int(u), int(v), float(weight)) for u, v in zip(iu[keep], ju[keep])))


# The 4-vertex instance used throughout the tests and the analytic model.
FOUR_VERTEX_EDGE_LIST = "4 4\n0 1 3\n1 2 8\n2 3 4\n0 2 1\n"


def four_vertex_graph() -> Graph:
    return parse_edge_list(FOUR_VERTEX_EDGE_LIST)
