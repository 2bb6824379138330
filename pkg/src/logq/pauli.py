"""Pauli-string decomposition of a real symmetric matrix and term-wise expectation values.

A Pauli string on ``N`` qubits is stored as a pair of bit masks ``(x, z)``.
Letter ``j`` (counting from the left) acts on index bit ``N - 1 - j``;
``I = (0, 0)``, ``X = (1, 0)``, ``Z = (0, 1)``, ``Y = (1, 1)``. With ``Y = iXZ``
the string acts as ``P|c> = i^{|x & z|} (-1)^{|c & z|} |c ^ x>``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PRUNE_EPSILON = 1e-12
_LETTERS = "IXYZ"
_CHUNK = 2048


def _popcount(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.uint64)
    count = np.zeros(a.shape, dtype=np.int64)
    while np.any(a):
        count += (a & np.uint64(1)).astype(np.int64)
        a = a >> np.uint64(1)
    return count


def _walsh_hadamard(a: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along the last axis (length a power of 2)."""
    a = np.array(a, dtype=complex)
    n = a.shape[-1]
    h = 1
    while h < n:
        a = a.reshape(a.shape[:-1] + (n // (2 * h), 2, h))
        lo, hi = a[..., 0, :], a[..., 1, :]
        a = np.stack((lo + hi, lo - hi), axis=-2).reshape(a.shape[:-3] + (n,))
        h *= 2
    return a


def string_to_masks(s: str) -> tuple[int, int]:
    x = z = 0
    for letter in s:
        x <<= 1
        z <<= 1
        if letter in "XY":
            x |= 1
        if letter in "ZY":
            z |= 1
        if letter not in _LETTERS:
            raise ValueError(f"not a Pauli letter: {letter!r}")
    return x, z


def masks_to_string(x: int, z: int, n_qubits: int) -> str:
    letters = []
    for bit in range(n_qubits - 1, -1, -1):
        xb, zb = (x >> bit) & 1, (z >> bit) & 1
        letters.append(_LETTERS[xb + 3 * zb - 2 * xb * zb])
    return "".join(letters)


def pauli_matrix(s: str) -> np.ndarray:
    """Dense matrix of a Pauli string via Kronecker products (reference path)."""
    single = {
        "I": np.eye(2, dtype=complex),
        "X": np.array([[0, 1], [1, 0]], dtype=complex),
        "Y": np.array([[0, -1j], [1j, 0]]),
        "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    }
    m = np.ones((1, 1), dtype=complex)
    for letter in s:
        m = np.kron(m, single[letter])
    return m


@dataclass(frozen=True)
class PauliDecomposition:
    """Real-coefficient Pauli expansion, terms in lexicographic order (I < X < Y < Z)."""

    n_qubits: int
    strings: tuple[str, ...]
    coefficients: np.ndarray

    def __len__(self):
        return len(self.strings)

    def as_dict(self) -> dict[str, float]:
        return {s: float(c) for s, c in zip(self.strings, self.coefficients)}

    def masks(self) -> tuple[np.ndarray, np.ndarray]:
        xz = [string_to_masks(s) for s in self.strings]
        if not xz:
            return np.zeros(0, np.int64), np.zeros(0, np.int64)
        x, z = zip(*xz)
        return np.array(x, dtype=np.int64), np.array(z, dtype=np.int64)

    def to_matrix(self) -> np.ndarray:
        dim = 2 ** self.n_qubits
        m = np.zeros((dim, dim), dtype=complex)
        for s, c in zip(self.strings, self.coefficients):
            m += c * pauli_matrix(s)
        return m

    def to_csv(self) -> str:
        return "".join(f"{s},{c:.17g}\n" for s, c in zip(self.strings, self.coefficients))


def decompose(L, prune_epsilon: float = PRUNE_EPSILON) -> PauliDecomposition:
    """Coefficients ``Tr(J_k L) / 2^N`` for every Pauli string ``J_k``.

    For a fixed X-mask ``x`` the traces over all Z-masks are one Walsh-Hadamard
    transform of ``c -> L[c, c ^ x]``, so the whole table costs ``O(4^N N)``.
    """
    M = np.asarray(getattr(L, "matrix", L), dtype=float)
    dim = M.shape[0]
    if M.shape != (dim, dim) or dim & (dim - 1) or dim < 2:
        raise ValueError("matrix must be square with a power-of-two dimension >= 2")
    if not np.allclose(M, M.T, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    n_qubits = dim.bit_length() - 1
    c = np.arange(dim)
    xs = np.arange(dim)
    diag_slices = M[c[None, :], c[None, :] ^ xs[:, None]]  # [x, c] -> L[c, c ^ x]
    traces = _walsh_hadamard(diag_slices)  # [x, z]
    ny = _popcount(xs[:, None] & xs[None, :]) % 4
    coeffs = (1j ** ny) * traces / dim
    if np.max(np.abs(coeffs.imag), initial=0.0) > 1e-9:
        raise ValueError("non-real Pauli coefficient; matrix is not real symmetric")
    coeffs = coeffs.real
    keep = np.abs(coeffs) > prune_epsilon
    xi, zi = np.nonzero(keep)
    strings = [masks_to_string(int(x), int(z), n_qubits) for x, z in zip(xi, zi)]
    order = sorted(range(len(strings)), key=lambda k: strings[k].translate(str.maketrans("IXYZ", "0123")))
    return PauliDecomposition(
        n_qubits,
        tuple(strings[k] for k in order),
        np.array([coeffs[xi[k], zi[k]] for k in order], dtype=float),
    )


def term_expectations(d: PauliDecomposition, psi) -> np.ndarray:
    """Per-term ``<psi|J_k|psi>``, one entry per stored Pauli string."""
    psi = np.asarray(psi, dtype=complex)
    dim = 2 ** d.n_qubits
    if psi.shape != (dim,):
        raise ValueError(f"state has dimension {psi.size}, decomposition needs {dim}")
    if len(d) == 0:
        return np.zeros(0)
    x, z = d.masks()
    c = np.arange(dim)
    out = np.empty(len(d))
    for lo in range(0, len(d), _CHUNK):
        xs, zs = x[lo : lo + _CHUNK, None], z[lo : lo + _CHUNK, None]
        signs = 1 - 2 * (_popcount(c[None, :] & zs) % 2)
        phase = 1j ** (_popcount(xs[:, 0] & zs[:, 0]) % 4)
        vals = phase * np.sum(signs * np.conj(psi[c[None, :] ^ xs]) * psi[None, :], axis=1)
        if np.max(np.abs(vals.imag)) > 1e-9:
            raise ValueError("Pauli expectation is not real; operator is not Hermitian")
        out[lo : lo + _CHUNK] = vals.real
    return out


def expectation(d: PauliDecomposition, psi) -> float:
    """``sum_k c_k <psi|J_k|psi>``."""
    return float(np.dot(d.coefficients, term_expectations(d, psi)))


def max_terms(n_qubits: int) -> int:
    """Upper bound on non-zero terms for a real symmetric matrix: strings with an even number of Y."""
    return (4**n_qubits + 2**n_qubits) // 2
