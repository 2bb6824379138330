"""Closed-form cost of the 4-vertex example and one-dimensional slices of it.

The example graph has edges (0,1,3), (0,2,1), (1,2,8), (2,3,4). Its cost is

    C = 1.5 cos(pi (R1 - R0)) + 0.5 cos(pi (R2 - R0))
      + 4 cos(pi (R2 - R1)) + 2 cos(pi (R3 - R2)) - 8,

and fixing ``R1 = alpha`` and ``R2 = beta`` leaves the theta_0 dependence

    f(theta_0) = 1.5 cos(pi (alpha - R(theta_0))) + 0.5 cos(pi (beta - R(theta_0))).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .encoding import EncodingSpec, Kind, evaluate, r_derivative


def example_cost(r0, r1, r2, r3):
    pi = math.pi
    return (
        1.5 * np.cos(pi * (r1 - r0))
        + 0.5 * np.cos(pi * (r2 - r0))
        + 4.0 * np.cos(pi * (r2 - r1))
        + 2.0 * np.cos(pi * (r3 - r2))
        - 8.0
    )


@dataclass(frozen=True)
class SliceRequest:
    alpha: float
    beta: float
    enc: EncodingSpec
    start: float = -0.6 * math.pi
    stop: float = 2.6 * math.pi
    points: int = 2001

    def __post_init__(self):
        if not (0 <= self.alpha <= 1 and 0 <= self.beta <= 1):
            raise ValueError("alpha and beta must lie in [0, 1]")
        if self.points < 2:
            raise ValueError("need at least two grid points")
        lo, hi = -self.enc.gamma * math.pi, (2 + self.enc.gamma) * math.pi
        if self.start < lo - 1e-12 or self.stop > hi + 1e-12 or self.start >= self.stop:
            raise ValueError(f"grid must lie within [{lo:.6g}, {hi:.6g}]")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


def slice_values(req: SliceRequest) -> tuple[np.ndarray, np.ndarray]:
    theta0 = req.grid()
    R = evaluate(req.enc, theta0)
    f = 1.5 * np.cos(math.pi * (req.alpha - R)) + 0.5 * np.cos(math.pi * (req.beta - R))
    return theta0, f


def slice_derivative(req: SliceRequest) -> np.ndarray:
    """Analytic df/dtheta_0 on the request grid."""
    theta0 = req.grid()
    R = evaluate(req.enc, theta0)
    dR = r_derivative(req.enc, theta0)
    return math.pi * dR * (
        1.5 * np.sin(math.pi * (req.alpha - R)) + 0.5 * np.sin(math.pi * (req.beta - R))
    )


def slice_csv(req: SliceRequest) -> str:
    theta0, f = slice_values(req)
    enc = req.enc
    head = (
        f"# alpha={req.alpha:g} beta={req.beta:g} encoding={enc.kind.value} "
        f"lambda={enc.lam:g} kappa={enc.kappa:g} gamma={enc.gamma:g} points={req.points}\n"
        "theta0,f\n"
    )
    return head + "".join(f"{t:.12g},{v:.12g}\n" for t, v in zip(theta0, f))


@dataclass(frozen=True)
class LocalMinimum:
    index: int
    theta: float
    value: float
    excess: float  # value above the lowest grid value
    depth: float  # rise needed before reaching a strictly lower value; inf for a global minimum


def _barrier(f: np.ndarray, i: int, step: int) -> float:
    """Largest rise from ``f[i]`` walking in direction ``step`` until a lower value (inf if none)."""
    peak = f[i]
    j = i + step
    while 0 <= j < f.size:
        if f[j] < f[i]:
            return peak - f[i]
        peak = max(peak, f[j])
        j += step
    return math.inf


def local_minima(theta: np.ndarray, f: np.ndarray, *, include_endpoints: bool = False) -> list[LocalMinimum]:
    """Discrete local minima of sampled values.

    Interior points qualify when strictly lower than both neighbours. With
    ``include_endpoints`` a grid end also qualifies when strictly lower than
    its single neighbour. ``depth`` is the smaller of the two barriers that
    separate the point from lower ground.
    """
    f = np.asarray(f, dtype=float)
    fmin = float(f.min())
    idx = list(np.nonzero((f[1:-1] < f[:-2]) & (f[1:-1] < f[2:]))[0] + 1)
    if include_endpoints and f.size > 1:
        if f[0] < f[1]:
            idx.insert(0, 0)
        if f[-1] < f[-2]:
            idx.append(f.size - 1)
    out = []
    for i in idx:
        depth = min(_barrier(f, i, -1), _barrier(f, i, +1))
        out.append(LocalMinimum(int(i), float(theta[i]), float(f[i]), float(f[i]) - fmin, depth))
    return out


def traps(theta, f, tol: float = 1e-6, **kwargs) -> list[LocalMinimum]:
    """Local minima more than ``tol`` above the lowest value and walled in by a barrier above ``tol``."""
    return [m for m in local_minima(theta, f, **kwargs) if m.excess > tol and m.depth > tol]


def flat_fraction(req: SliceRequest, threshold: float = 1e-3) -> float:
    """Share of grid points where ``|df/dtheta_0| < threshold``."""
    return float(np.mean(np.abs(slice_derivative(req)) < threshold))


def default_encoding(kind: str | Kind, lam: float, kappa: float = 0.2, gamma: float = 0.6) -> EncodingSpec:
    return EncodingSpec(Kind(kind), lam, kappa, gamma)
