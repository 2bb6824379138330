"""Parameter optimization: a generational GA and the multistart local scheme with lambda annealing."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from .encoding import EncodingSpec, Kind
from .graph import Graph
from .laplacian import build_laplacian, cut_value
from .pauli import decompose
from .state import cost_closed_form, extract_cut

TWO_PI = 2.0 * math.pi


class NonFiniteObjectiveError(FloatingPointError):
    def __init__(self, x, value):
        super().__init__(f"objective returned {value!r} at theta={np.array2string(np.asarray(x), precision=4)}")
        self.x = np.asarray(x)
        self.value = value


@dataclass(frozen=True)
class GaConfig:
    population_size: int = 20
    generations: int = 20
    mutation_rate: float = 0.1
    crossover_rate: float = 0.9
    elite_count: int = 1
    tournament_size: int = 3
    mutation_sigma: float = 0.3
    seed: int = 0

    def __post_init__(self):
        if self.population_size < 1 or self.generations < 0:
            raise ValueError("population_size must be >= 1 and generations >= 0")
        if not 0 <= self.elite_count < self.population_size:
            raise ValueError("need 0 <= elite_count < population_size")
        if not (0 <= self.mutation_rate <= 1 and 0 <= self.crossover_rate <= 1):
            raise ValueError("rates must lie in [0, 1]")

    @property
    def budget(self) -> int:
        return self.population_size * (self.generations + 1)


@dataclass(frozen=True)
class GradConfig:
    """Budget split of the local scheme.

    ``lambda_schedule`` and ``rhobeg_schedule`` are ``(fraction of max_evals, value)``
    pairs. The lambda phases plus ``post_fraction`` (run at ``post_lambda``) and
    the rhobeg stages each cover the whole budget; the optimizer is restarted
    wherever either schedule changes value.
    """

    multistarts: int = 8
    max_evals: int = 500
    lambda_schedule: tuple[tuple[float, float], ...] = ((0.6, 5.0), (0.3, 6.0))
    post_lambda: float = 30.0
    post_fraction: float = 0.1
    rhobeg_schedule: tuple[tuple[float, float], ...] = ((0.5, 3.0), (0.3, 1.0), (0.2, 0.3))
    rhoend: float = 1e-6
    restart_rounds: bool = True
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lambda_schedule", tuple((float(f), float(v)) for f, v in self.lambda_schedule))
        object.__setattr__(self, "rhobeg_schedule", tuple((float(f), float(v)) for f, v in self.rhobeg_schedule))
        if self.multistarts < 1 or self.max_evals < 0:
            raise ValueError("multistarts must be >= 1 and max_evals >= 0")
        if not self.lambda_schedule or not self.rhobeg_schedule:
            raise ValueError("schedules must be non-empty")
        lam_total = sum(f for f, _ in self.lambda_schedule) + self.post_fraction
        rho_total = sum(f for f, _ in self.rhobeg_schedule)
        if abs(lam_total - 1) > 1e-9 or abs(rho_total - 1) > 1e-9:
            raise ValueError("schedule fractions must sum to 1")
        if any(v <= 0 for _, v in self.rhobeg_schedule) or any(v <= 0 for _, v in self.lambda_schedule):
            raise ValueError("lambda and rhobeg values must be positive")

    @property
    def rhobeg_initial(self) -> float:
        return self.rhobeg_schedule[0][1]

    @property
    def budget(self) -> int:
        return self.multistarts + self.max_evals

    def with_budget(self, max_evals: int) -> GradConfig:
        return replace(self, max_evals=max_evals)

    def segments(self) -> list[tuple[int, float, float]]:
        """``(evals, lambda, rhobeg)`` for each restart of the local optimizer."""
        lam_steps = list(self.lambda_schedule) + [(self.post_fraction, self.post_lambda)]
        ends = []
        for steps in (lam_steps, self.rhobeg_schedule):
            acc = 0.0
            for f, _ in steps:
                acc += f
                ends.append(acc)
        cuts = sorted({0.0, 1.0, *(min(e, 1.0) for e in ends)})

        def value_at(steps, x):
            acc = 0.0
            for f, v in steps:
                acc += f
                if x < acc:
                    return v
            return steps[-1][1]

        out = []
        for a, b in zip(cuts, cuts[1:]):
            if b - a < 1e-12:
                continue
            n = round(b * self.max_evals) - round(a * self.max_evals)
            mid = 0.5 * (a + b)
            out.append((n, value_at(lam_steps, mid), value_at(self.rhobeg_schedule, mid)))
        return out


@dataclass
class SolveResult:
    method: str
    best_theta: np.ndarray
    assignment: np.ndarray
    cut_value: float
    final_cost: float
    encoding: EncodingSpec
    cost_trace: list[tuple[int, float, float]]
    objective_calls: int
    convergence_diag: float
    complexity: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "cut_value": self.cut_value,
            "final_cost": self.final_cost,
            "objective_calls": self.objective_calls,
            "convergence_diag": self.convergence_diag,
            "assignment": [int(x) for x in self.assignment],
            "best_theta": [float(t) for t in self.best_theta],
            "encoding": {
                "kind": self.encoding.kind.value,
                "lambda": self.encoding.lam,
                "kappa": self.encoding.kappa,
                "gamma": self.encoding.gamma,
            },
            "complexity": dict(self.complexity),
        }

    def trace_csv(self) -> str:
        lines = ["eval_index,cost,best_cost"]
        lines += [f"{i},{c:.17g},{b:.17g}" for i, c, b in self.cost_trace]
        return "\n".join(lines) + "\n"


class _Recorder:
    """Counts objective calls and keeps ``(index, cost, running best)``."""

    def __init__(self, fn: Callable[[np.ndarray], float]):
        self.fn = fn
        self.trace: list[tuple[int, float, float]] = []
        self.best = math.inf

    def __call__(self, theta) -> float:
        value = float(self.fn(theta))
        self.best = min(self.best, value)
        self.trace.append((len(self.trace) + 1, value, self.best))
        return value

    @property
    def calls(self) -> int:
        return len(self.trace)


def complexity_counters(g: Graph, L=None) -> dict[str, int]:
    L = L if L is not None else build_laplacian(g)
    n_qubits = L.n_qubits
    return {
        "n_qubits": n_qubits,
        "n_params": 2**n_qubits,
        "cnot_estimate": 2**n_qubits,
        "pauli_terms": len(decompose(L)),
    }


def _finish(method, g, L, enc, theta, final_cost, rec) -> SolveResult:
    x, diag = extract_cut(theta, enc, g.n_vertices)
    return SolveResult(
        method=method,
        best_theta=np.asarray(theta, dtype=float).copy(),
        assignment=x,
        cut_value=cut_value(g, x),
        final_cost=float(final_cost),
        encoding=enc,
        cost_trace=rec.trace,
        objective_calls=rec.calls,
        convergence_diag=diag,
        complexity=complexity_counters(g, L),
    )


class _BudgetExhausted(Exception):
    pass


def local_optimizer(objective, x0, box, rhobeg: float, max_evals: int, rhoend: float = 1e-6):
    """Box-constrained COBYLA that never returns a point worse than its start.

    At most ``max_evals`` objective calls are made; the best point seen is
    returned together with its value. Points are clipped into ``box`` before
    evaluation. With ``max_evals == 0`` the start is returned with value ``nan``.
    """
    if rhobeg <= 0:
        raise ValueError("rhobeg must be positive")
    lo, hi = box
    x0 = np.clip(np.asarray(x0, dtype=float), lo, hi)
    if max_evals <= 0:
        return x0.copy(), math.nan
    state = {"calls": 0, "x": x0.copy(), "f": math.inf}

    def fun(x):
        if state["calls"] >= max_evals:
            raise _BudgetExhausted
        x = np.clip(x, lo, hi)
        value = float(objective(x))
        state["calls"] += 1
        if not math.isfinite(value):
            raise NonFiniteObjectiveError(x, value)
        if value < state["f"]:
            state["x"], state["f"] = x.copy(), value
        return value

    try:
        minimize(
            fun,
            x0,
            method="COBYLA",
            bounds=[(lo, hi)] * x0.size,
            options={"rhobeg": rhobeg, "maxiter": max_evals, "tol": rhoend},
        )
    except _BudgetExhausted:
        pass
    return state["x"], state["f"]


def solve_grad(g: Graph, enc: EncodingSpec | None = None, cfg: GradConfig | None = None) -> SolveResult:
    """Multistart initialization followed by staged COBYLA runs with lambda annealing."""
    enc = enc or EncodingSpec(Kind.DISTORTED)
    cfg = cfg or GradConfig()
    if not enc.differentiable:
        raise ValueError("the local scheme needs a smooth encoding (sigmoid or distorted)")
    L = build_laplacian(g)
    dim = L.dim
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    first_lam = cfg.lambda_schedule[0][1]
    current = enc.with_lambda(first_lam)
    rec = _Recorder(lambda t: cost_closed_form(t, current, L))
    best = None  # (cost at the final lambda, theta, encoding)
    remaining = cfg.max_evals
    first_round = True
    while first_round or remaining >= cfg.multistarts + dim + 2:
        if not first_round:
            remaining -= cfg.multistarts
        current = enc.with_lambda(first_lam)
        starts = rng.uniform(0.0, TWO_PI, size=(cfg.multistarts, dim))
        costs = [rec(t) for t in starts]
        k = int(np.argmin(costs))
        theta, final = starts[k].copy(), costs[k]
        used_before = rec.calls
        for evals, lam, rhobeg in cfg.with_budget(remaining).segments():
            if evals == 0:
                continue
            current = enc.with_lambda(lam)
            theta, final = local_optimizer(rec, theta, current.box, rhobeg, evals, cfg.rhoend)
        remaining -= rec.calls - used_before
        if best is None or final < best[0]:
            best = (final, theta, current)
        first_round = False
        if not cfg.restart_rounds:
            break
    final, theta, current = best
    return _finish("grad", g, L, current, theta, final, rec)


def solve_ga(g: Graph, enc: EncodingSpec | None = None, cfg: GaConfig | None = None) -> SolveResult:
    """Generational GA over theta in [0, 2pi]^dim.

    Tournament selection, uniform crossover, per-gene Gaussian mutation
    wrapped into [0, 2pi]. Each generation evaluates ``population_size``
    children; the next population keeps the ``elite_count`` best parents and
    fills the rest with the best children.
    """
    enc = enc or EncodingSpec(Kind.STEP)
    cfg = cfg or GaConfig()
    L = build_laplacian(g)
    dim = L.dim
    pop_size = cfg.population_size
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    rec = _Recorder(lambda t: cost_closed_form(t, enc, L))

    pop = rng.uniform(0.0, TWO_PI, size=(pop_size, dim))
    fit = np.array([rec(t) for t in pop])

    def tournament():
        idx = rng.integers(0, pop_size, size=cfg.tournament_size)
        return pop[idx[np.argmin(fit[idx])]]

    for _ in range(cfg.generations):
        children = np.empty_like(pop)
        for i in range(pop_size):
            p1, p2 = tournament(), tournament()
            if rng.random() < cfg.crossover_rate:
                child = np.where(rng.random(dim) < 0.5, p1, p2)
            else:
                child = p1.copy()
            mutate = rng.random(dim) < cfg.mutation_rate
            child[mutate] += rng.normal(0.0, cfg.mutation_sigma, size=int(mutate.sum()))
            children[i] = np.mod(child, TWO_PI)
        child_fit = np.array([rec(t) for t in children])
        elite = np.argsort(fit, kind="stable")[: cfg.elite_count]
        rest = np.argsort(child_fit, kind="stable")[: pop_size - cfg.elite_count]
        pop = np.concatenate([pop[elite], children[rest]])
        fit = np.concatenate([fit[elite], child_fit[rest]])

    k = int(np.argmin(fit))
    return _finish("ga", g, L, enc, pop[k], fit[k], rec)


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0
