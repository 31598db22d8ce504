from .common import (
    CliqueProblem,
    ExplicitProblem,
    XorProblem,
    as_problem,
    brute_force_max_clique,
    is_clique,
)
from .dimacs import DimacsParseError, parse_dimacs, read_dimacs
from .exact import InstanceTooLargeError, MaxCliqueSolver, max_clique_exact
from .pls import PhasedLocalSearch, PlsResult, pls
from .solver import SOLVERS, parse_solver_spec, solve

__all__ = [
    "CliqueProblem",
    "DimacsParseError",
    "ExplicitProblem",
    "InstanceTooLargeError",
    "MaxCliqueSolver",
    "PhasedLocalSearch",
    "PlsResult",
    "SOLVERS",
    "XorProblem",
    "as_problem",
    "brute_force_max_clique",
    "is_clique",
    "max_clique_exact",
    "parse_dimacs",
    "parse_solver_spec",
    "pls",
    "read_dimacs",
    "solve",
]
