import math

import numpy as np
import pytest

from logq.encoding import EncodingSpec, Kind, evaluate
from logq.graph import gnp_random_graph
from logq.laplacian import build_laplacian, cut_value
from logq.optimize import (
    GaConfig,
    GradConfig,
    NonFiniteObjectiveError,
    local_optimizer,
    solve_ga,
    solve_grad,
)
from logq.state import cost_closed_form

PI = math.pi


def test_ga_four_vertex_best_of_five(g4):
    results = [solve_ga(g4, EncodingSpec(Kind.STEP), GaConfig(seed=s)) for s in range(5)]
    assert min(r.final_cost for r in results) == -15
    for r in results:
        assert r.objective_calls == 20 * 21
        assert r.cut_value == cut_value(g4, r.assignment)


def test_ga_degenerate_budget(g4):
    res = solve_ga(g4, EncodingSpec(Kind.STEP), GaConfig(population_size=1, generations=0, elite_count=0, seed=3))
    start = np.random.Generator(np.random.PCG64(3)).uniform(0, 2 * PI, size=(1, 4))[0]
    np.testing.assert_array_equal(res.best_theta, start)
    assert res.objective_calls == 1
    assert res.final_cost == cost_closed_form(start, EncodingSpec(Kind.STEP), build_laplacian(g4))


@pytest.mark.slow
def test_ga_n50_sanity_floor():
    res = solve_ga(gnp_random_graph(50, 0.3, 0), EncodingSpec(Kind.STEP), GaConfig(seed=0))
    assert res.final_cost <= -190


def test_ga_config_validation():
    with pytest.raises(ValueError):
        GaConfig(population_size=2, elite_count=2)
    with pytest.raises(ValueError):
        GaConfig(mutation_rate=1.5)


def test_grad_four_vertex(g4):
    res = solve_grad(g4, EncodingSpec(Kind.DISTORTED), GradConfig(multistarts=5, max_evals=500))
    assert abs(res.final_cost + 15) < 1e-6
    assert res.cut_value == 15
    assert list(res.assignment * res.assignment[0]) == [1, -1, 1, -1]
    R = evaluate(res.encoding, res.best_theta)
    assert np.all(np.minimum(R, 1 - R) < 1e-2)
    assert res.encoding.lam == 30.0
    assert res.objective_calls <= 505


def test_grad_degenerate_budget(g4):
    res = solve_grad(g4, EncodingSpec(Kind.DISTORTED), GradConfig(multistarts=1, max_evals=1, seed=2))
    start = np.random.Generator(np.random.PCG64(2)).uniform(0, 2 * PI, size=(1, 4))[0]
    np.testing.assert_array_equal(res.best_theta, start)
    assert res.objective_calls <= 2


def test_grad_zero_evals_returns_best_start(g4):
    res = solve_grad(g4, EncodingSpec(Kind.DISTORTED), GradConfig(multistarts=6, max_evals=0, seed=1))
    assert res.objective_calls == 6
    assert res.final_cost == min(c for _, c, _ in res.cost_trace)


def test_grad_requires_smooth_encoding(g4):
    with pytest.raises(ValueError):
        solve_grad(g4, EncodingSpec(Kind.STEP))


@pytest.mark.parametrize("seed", range(4))
def test_budget_accounting_and_trace(seed):
    g = gnp_random_graph(12, 0.3, seed)
    cfg = GradConfig(multistarts=7, max_evals=300, seed=seed)
    res = solve_grad(g, EncodingSpec(Kind.DISTORTED), cfg)
    assert res.objective_calls <= cfg.budget
    ga_cfg = GaConfig(population_size=6, generations=5, seed=seed)
    ga = solve_ga(g, EncodingSpec(Kind.STEP), ga_cfg)
    assert ga.objective_calls == ga_cfg.budget
    for r in (res, ga):
        best = [b for _, _, b in r.cost_trace]
        assert all(b1 <= b0 for b0, b1 in zip(best, best[1:]))
        assert [i for i, _, _ in r.cost_trace] == list(range(1, r.objective_calls + 1))
        assert r.cut_value == cut_value(g, r.assignment)


def test_determinism():
    g = gnp_random_graph(10, 0.4, 5)
    a = solve_grad(g, cfg=GradConfig(max_evals=200, seed=9))
    b = solve_grad(g, cfg=GradConfig(max_evals=200, seed=9))
    assert a.to_dict() == b.to_dict() and a.trace_csv() == b.trace_csv()
    a = solve_ga(g, cfg=GaConfig(seed=9))
    b = solve_ga(g, cfg=GaConfig(seed=9))
    assert a.to_dict() == b.to_dict()


def test_grad_config_segments():
    segs = GradConfig(max_evals=500).segments()
    assert sum(n for n, _, _ in segs) == 500
    assert segs == [(250, 5.0, 3.0), (50, 5.0, 1.0), (100, 6.0, 1.0), (50, 6.0, 0.3), (50, 30.0, 0.3)]
    with pytest.raises(ValueError):
        GradConfig(lambda_schedule=((0.5, 5.0),))
    with pytest.raises(ValueError):
        GradConfig(multistarts=0)
    assert GradConfig().rhobeg_initial == 3.0


def test_local_optimizer_quadratic():
    dim = 4
    calls = []

    def f(x):
        calls.append(1)
        return float(np.sum((x - 1) ** 2))

    x, v = local_optimizer(f, np.zeros(dim), (-2 * PI, 3 * PI), rhobeg=1.0, max_evals=200 * dim, rhoend=1e-8)
    np.testing.assert_allclose(x, 1.0, atol=1e-4)
    assert v <= f(np.zeros(dim))
    assert len(calls) <= 200 * dim + 1


def test_local_optimizer_steps_over_small_barrier():
    # shallow well at 0 (value 0.1), wall of height 0.05 at t = 0.5, deep well at 3 (value 0)
    def f(x):
        t = x[0]
        if t < 0.5:
            return 0.1 + 0.2 * t**2
        return 0.15 - 0.15 * min(1.0, (t - 0.5) / 2.5) + 0.1 * max(0.0, t - 3.0) ** 2

    x_big, v_big = local_optimizer(f, np.array([0.0]), (-PI, 3 * PI), rhobeg=3.0, max_evals=200)
    assert abs(x_big[0] - 3.0) < 1e-3 and v_big < 1e-6
    x_small, v_small = local_optimizer(f, np.array([0.0]), (-PI, 3 * PI), rhobeg=0.1, max_evals=200)
    assert abs(x_small[0]) < 1e-3 and v_small > 0.09


def test_local_optimizer_respects_box_and_budget():
    calls = []

    def f(x):
        calls.append(x.copy())
        return float(-np.sum(x))

    x, v = local_optimizer(f, np.array([0.5, 0.5]), (0.0, 1.0), rhobeg=0.5, max_evals=37)
    assert len(calls) <= 37
    assert all(np.all((c >= 0) & (c <= 1)) for c in calls)
    assert np.all((x >= 0) & (x <= 1))


def test_local_optimizer_zero_budget_and_errors():
    x0 = np.array([1.0, 2.0])
    x, v = local_optimizer(lambda x: 1.0, x0, (-5, 5), rhobeg=1.0, max_evals=0)
    np.testing.assert_array_equal(x, x0)
    assert math.isnan(v)
    with pytest.raises(NonFiniteObjectiveError):
        local_optimizer(lambda x: math.nan, x0, (-5, 5), rhobeg=1.0, max_evals=10)
    with pytest.raises(ValueError):
        local_optimizer(lambda x: 1.0, x0, (-5, 5), rhobeg=0.0, max_evals=10)


def test_result_serialisation(g4):
    res = solve_grad(g4, cfg=GradConfig(multistarts=2, max_evals=30))
    d = res.to_dict()
    assert d["complexity"] == {"n_qubits": 2, "n_params": 4, "cnot_estimate": 4, "pauli_terms": 10}
    assert d["encoding"]["kind"] == "distorted"
    lines = res.trace_csv().splitlines()
    assert lines[0] == "eval_index,cost,best_cost"
    assert len(lines) == res.objective_calls + 1
