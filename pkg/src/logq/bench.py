"""GA versus local-scheme comparison on a list of instances."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .encoding import EncodingSpec, Kind
from .graph import Graph, gnp_random_graph
from .optimize import GaConfig, GradConfig, solve_ga, solve_grad, timed

# Budgets per graph size: (local-scheme evals, GA population, GA generations).
TABLE_BUDGETS = {50: (250, 20, 20), 128: (500, 25, 20), 256: (750, 25, 30)}
DEFAULT_BUDGET = (500, 20, 20)

COLUMNS = ["instance", "n", "edges", "method", "final_cost", "cut_value", "calls", "convergence_diag", "wall_time"]


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph

    @classmethod
    def gnp(cls, n: int, density: float, seed: int) -> Instance:
        return cls(f"gnp-{n}-{density:g}-{seed}", gnp_random_graph(n, density, seed))


def run_instance(inst: Instance, seed: int = 0, budgets=None, grad_enc=None, ga_enc=None) -> list[dict]:
    n = inst.graph.n_vertices
    evals, pop, gens = (budgets or TABLE_BUDGETS).get(n, DEFAULT_BUDGET)
    grad, t_grad = timed(solve_grad, inst.graph, grad_enc or EncodingSpec(Kind.DISTORTED), GradConfig(max_evals=evals, seed=seed))
    ga, t_ga = timed(solve_ga, inst.graph, ga_enc or EncodingSpec(Kind.STEP), GaConfig(population_size=pop, generations=gens, seed=seed))
    rows = []
    for res, wall in ((grad, t_grad), (ga, t_ga)):
        rows.append(
            {
                "instance": inst.name,
                "n": n,
                "edges": inst.graph.n_edges,
                "method": res.method,
                "final_cost": f"{res.final_cost:.10g}",
                "cut_value": f"{res.cut_value:g}",
                "calls": res.objective_calls,
                "convergence_diag": f"{res.convergence_diag:.3e}",
                "wall_time": f"{wall:.3f}",
            }
        )
    return rows


def run_bench(instances: list[Instance], seed: int = 0, threads: int = 1, budgets=None) -> list[dict]:
    """Rows in instance order, grad before GA, whatever the thread count."""
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        chunks = pool.map(lambda inst: run_instance(inst, seed, budgets), instances)
        return [row for chunk in chunks for row in chunk]


def rows_to_csv(rows: list[dict], wall_time: bool = True) -> str:
    cols = COLUMNS if wall_time else [c for c in COLUMNS if c != "wall_time"]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
