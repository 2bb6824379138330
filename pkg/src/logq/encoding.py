"""Phase-fraction maps R: theta -> [0, 1] and their derivatives.

Three families:

* ``step``: 0 on [0, pi), 1 on [pi, 2pi]; angles are wrapped modulo 2pi.
* ``sigmoid``: ``1 / (1 + exp(lam * (pi - theta)))``; tends to ``step`` as lam grows.
* ``distorted``: the sigmoid with an extra falling edge at ``(2 + kappa) pi`` and
  a rising bump below ``-kappa pi``, so that the box ``[-gamma pi, (2 + gamma) pi]``
  behaves like a period of the step function with smooth, non-vanishing slopes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

TWO_PI = 2.0 * math.pi


class Kind(str, enum.Enum):
    STEP = "step"
    SIGMOID = "sigmoid"
    DISTORTED = "distorted"


class UnsupportedEncodingError(ValueError):
    """Raised when a derivative is requested for the (piecewise-constant) step encoding."""


@dataclass(frozen=True)
class EncodingSpec:
    kind: Kind = Kind.DISTORTED
    lam: float = 5.0
    kappa: float = 0.2
    gamma: float = 0.6

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not self.lam > 0:
            raise ValueError("lambda must be positive")
        if not 0.0 <= self.kappa < self.gamma <= 1.0:
            raise ValueError("need 0 <= kappa < gamma <= 1")

    def with_lambda(self, lam: float) -> EncodingSpec:
        return replace(self, lam=lam)

    @property
    def box(self) -> tuple[float, float]:
        """Parameter box explored by the local optimizer."""
        if self.kind is Kind.DISTORTED:
            return -self.gamma * math.pi, (2.0 + self.gamma) * math.pi
        return 0.0, TWO_PI

    @property
    def differentiable(self) -> bool:
        return self.kind is not Kind.STEP

    def __call__(self, theta):
        return evaluate(self, theta)


def sgm(lam: float, x):
    """``1 / (1 + exp(lam * x))`` without overflow for large ``|lam * x|``."""
    t = lam * np.asarray(x, dtype=float)
    e = np.exp(-np.abs(t))
    return np.where(t > 0, e / (1.0 + e), 1.0 / (1.0 + e))


def _sgm_prime(lam: float, x):
    """d/dx of ``sgm(lam, x)``."""
    s = sgm(lam, x)
    return -lam * s * (1.0 - s)


def r_step(theta):
    wrapped = np.mod(np.asarray(theta, dtype=float), TWO_PI)
    return np.where(wrapped < math.pi, 0.0, 1.0)


def r_sigmoid(theta, lam: float):
    return sgm(lam, math.pi - np.asarray(theta, dtype=float))


def _clamp(theta, gamma: float):
    lo, hi = -gamma * math.pi, (2.0 + gamma) * math.pi
    return np.clip(np.asarray(theta, dtype=float), lo, hi)


def r_distorted(theta, lam: float, kappa: float, gamma: float = 0.6):
    """Distorted sigmoid; ``theta`` is clamped to ``[-gamma pi, (2 + gamma) pi]``."""
    t = _clamp(theta, gamma)
    rise = sgm(lam, math.pi - t)
    fall = sgm(-lam, (2.0 + kappa) * math.pi - t)
    left = sgm(lam, kappa * math.pi + t)
    return rise * fall + left


def evaluate(spec: EncodingSpec, theta):
    if spec.kind is Kind.STEP:
        return r_step(theta)
    if spec.kind is Kind.SIGMOID:
        return r_sigmoid(theta, spec.lam)
    return r_distorted(theta, spec.lam, spec.kappa, spec.gamma)


def r_derivative(spec: EncodingSpec, theta):
    """dR/dtheta. Zero outside the clamping box for the distorted encoding."""
    if spec.kind is Kind.STEP:
        raise UnsupportedEncodingError("step encoding has zero derivative almost everywhere")
    theta = np.asarray(theta, dtype=float)
    lam = spec.lam
    if spec.kind is Kind.SIGMOID:
        return -_sgm_prime(lam, math.pi - theta)
    t = _clamp(theta, spec.gamma)
    a, b = math.pi - t, (2.0 + spec.kappa) * math.pi - t
    rise, fall = sgm(lam, a), sgm(-lam, b)
    d = -_sgm_prime(lam, a) * fall - rise * _sgm_prime(-lam, b) + _sgm_prime(lam, spec.kappa * math.pi + t)
    lo, hi = spec.box
    return np.where((theta < lo) | (theta > hi), 0.0, d)
