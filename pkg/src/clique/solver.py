"""Solver selection and timing."""

import logging
import time
from typing import Optional

from ..config import EXACT_MAX_NODES
from ..models import PlsParams, SolveResult
from .common import ProblemLike, as_problem
from .exact import max_clique_exact
from .pls import PhasedLocalSearch

logger = logging.getLogger(__name__)

SOLVERS = ("auto", "exact", "pls")


def parse_solver_spec(spec: str, seed: Optional[int] = None) -> tuple:
    """``exact``, ``auto`` or ``pls[:attempts[:selections]]`` -> (name, PlsParams)."""
    parts = spec.strip().lower().split(":")
    name = parts[0]
    if name not in SOLVERS:
        raise ValueError(f"Unknown solver {spec!r}, expected one of {SOLVERS}")
    params = PlsParams(seed=seed)
    if len(parts) > 1:
        if name != "pls" or len(parts) > 3:
            raise ValueError(f"Malformed solver spec {spec!r}")
        attempts = int(parts[1])
        selections = int(parts[2]) if len(parts) == 3 else params.max_selections
        params = PlsParams(attempts=attempts, max_selections=selections, seed=seed)
    return name, params


def solve(inst: ProblemLike, spec: str = "auto", seed: Optional[int] = None, target: Optional[int] = None) -> SolveResult:
    """Run the requested solver; ``auto`` is exact up to the exact node limit, PLS beyond."""
    name, params = parse_solver_spec(spec, seed)
    problem = as_problem(inst)
    if name == "auto":
        name = "exact" if len(problem) <= EXACT_MAX_NODES else "pls"

    started = time.perf_counter()
    if name == "exact":
        clique = max_clique_exact(problem)
        attempts = 1
    else:
        outcome = PhasedLocalSearch(problem, params).run(target)
        clique, attempts = outcome.clique, outcome.attempts_used
    wall_ms = (time.perf_counter() - started) * 1000.0
    logger.debug(f"{name}: clique of size {clique.size} on {len(problem)} nodes in {wall_ms:.1f} ms")
    return SolveResult(clique=clique, solver=name, attempts_used=attempts, wall_ms=wall_ms)
