"""Phase-encoded state, the cost function along two independent routes, and its gradient.

With unit-norm amplitudes ``2^{-N/2} exp(i pi R(theta_z))`` the cost is

    C(theta) = -(2^N / 4) <Psi|L|Psi>
             = -(1/4) [sum_z L_zz + 2 sum_{z>w} L_wz cos(pi (R_w - R_z))],

so ``-C`` equals the cut value whenever every ``R`` is 0 or 1.
"""

from __future__ import annotations

import math

import numpy as np

from .encoding import EncodingSpec, evaluate, r_derivative
from .pauli import PauliDecomposition, expectation


def _theta(theta, dim: int | None = None) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    if theta.ndim != 1:
        raise ValueError("theta must be one-dimensional")
    if dim is not None and theta.size != dim:
        raise ValueError(f"theta has {theta.size} entries, expected {dim}")
    return theta


def build_state(theta, enc: EncodingSpec) -> np.ndarray:
    theta = _theta(theta)
    dim = theta.size
    if dim < 2 or dim & (dim - 1):
        raise ValueError("theta length must be a power of two >= 2")
    return np.exp(1j * math.pi * evaluate(enc, theta)) / math.sqrt(dim)


def cost_closed_form(theta, enc: EncodingSpec, L) -> float:
    """Cosine form of the cost; evaluated as ``c^T L c + s^T L s`` with ``c, s = cos, sin(pi R)``."""
    M = getattr(L, "matrix", L)
    theta = _theta(theta, M.shape[0])
    phase = math.pi * evaluate(enc, theta)
    c, s = np.cos(phase), np.sin(phase)
    return -0.25 * float(c @ M @ c + s @ M @ s)


def cost_statevector(theta, enc: EncodingSpec, d: PauliDecomposition) -> float:
    """Same cost measured through the Pauli expansion of L on the prepared state."""
    dim = 2**d.n_qubits
    psi = build_state(_theta(theta, dim), enc)
    return -dim / 4.0 * expectation(d, psi)


def cost_gradient(theta, enc: EncodingSpec, L) -> np.ndarray:
    """``dC/dtheta_z = -(pi/2) R'(theta_z) sum_w L_wz sin(pi (R_w - R_z))``."""
    M = getattr(L, "matrix", L)
    theta = _theta(theta, M.shape[0])
    dR = r_derivative(enc, theta)
    phase = math.pi * evaluate(enc, theta)
    c, s = np.cos(phase), np.sin(phase)
    # sum_w L_wz sin(a_w - a_z) = c_z (L s)_z - s_z (L c)_z
    return -0.5 * math.pi * dR * (c * (M @ s) - s * (M @ c))


def extract_cut(theta, enc: EncodingSpec, n: int) -> tuple[np.ndarray, float]:
    """Round ``R`` at 0.5 into a +-1 assignment of the first ``n`` entries.

    Also returns ``max_z min(R_z, 1 - R_z)`` over those entries; near zero
    means every vertex has settled on one side.
    """
    R = evaluate(enc, _theta(theta))[:n]
    x = np.where(R < 0.5, 1, -1)
    diag = float(np.max(np.minimum(R, 1.0 - R))) if n else 0.0
    return x, diag
