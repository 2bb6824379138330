"""Log-qubit phase encoding for MaxCut: Laplacian Pauli expansion, smooth phase maps, and optimizers."""

__version__ = "0.1.0"

from .encoding import EncodingSpec, Kind
from .graph import Graph, gnp_random_graph, parse_edge_list
from .laplacian import build_laplacian, cut_value
from .optimize import GaConfig, GradConfig, SolveResult, solve_ga, solve_grad
from .oracle import brute_force_maxcut
from .pauli import decompose, expectation
from .state import build_state, cost_closed_form, cost_gradient, cost_statevector, extract_cut

__all__ = [
    "EncodingSpec",
    "GaConfig",
    "Graph",
    "GradConfig",
    "Kind",
    "SolveResult",
    "brute_force_maxcut",
    "build_laplacian",
    "build_state",
    "cost_closed_form",
    "cost_gradient",
    "cost_statevector",
    "cut_value",
    "decompose",
    "expectation",
    "extract_cut",
    "gnp_random_graph",
    "parse_edge_list",
    "solve_ga",
    "solve_grad",
]
