"""Phased local search for large clique instances."""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..config import MATERIALIZE_MAX_NODES, PLS_PENALTY_DECAY
from ..models import Clique, PlsParams
from ..rng import derive_seed
from .common import CliqueProblem, ProblemLike, as_problem

logger = logging.getLogger(__name__)

PHASES = ("random", "greedy", "penalty")


@dataclass
class PlsResult:
    clique: Clique
    attempts_used: int
    best_attempt: int


class PhasedLocalSearch:
    """Restarted local search cycling random, greedy and penalty selection.

    Every selection adds a node adjacent to the whole clique if one exists,
    otherwise swaps in a node missing exactly one member, otherwise perturbs.
    """

    def __init__(self, problem: CliqueProblem, params: PlsParams):
        self.problem = problem
        self.params = params
        self.m = len(problem)
        self.degrees = problem.degrees() if self.m else np.zeros(0, dtype=np.int64)
        self._matrix = problem.adjacency_matrix() if 0 < self.m <= MATERIALIZE_MAX_NODES else None
        self.logger = logging.getLogger(self.__class__.__name__)

    def _row(self, v: int) -> np.ndarray:
        if self._matrix is not None:
            return self._matrix[v]
        return self.problem.adjacency_row(v)

    def _pick(self, candidates: np.ndarray, phase: str, penalties: np.ndarray, rng: np.random.Generator) -> int:
        if phase == "greedy":
            scores = self.degrees[candidates]
            candidates = candidates[scores == scores.max()]
        elif phase == "penalty":
            scores = penalties[candidates]
            candidates = candidates[scores == scores.min()]
        return int(candidates[rng.integers(candidates.size)])

    def attempt(self, rng: np.random.Generator) -> List[int]:
        """One attempt from a uniformly random start node; returns the best clique seen."""
        m = self.m
        in_clique = np.zeros(m, dtype=bool)
        adj_count = np.zeros(m, dtype=np.int64)  # clique members adjacent to each node
        penalties = np.zeros(m, dtype=np.int64)
        members: List[int] = []
        tabu = -1

        def add(v: int):
            in_clique[v] = True
            adj_count[:] += self._row(v)
            members.append(v)

        def remove(v: int):
            in_clique[v] = False
            adj_count[:] -= self._row(v)
            members.remove(v)

        def restart(v: int):
            for w in list(members):
                remove(w)
            add(v)

        add(int(rng.integers(m)))
        best = list(members)

        for selection in range(self.params.max_selections):
            phase = PHASES[selection % len(PHASES)]
            missing = len(members) - adj_count
            additions = np.flatnonzero(~in_clique & (missing == 0))
            if additions.size:
                add(self._pick(additions, phase, penalties, rng))
            else:
                swaps = np.flatnonzero(~in_clique & (missing == 1))
                swaps = swaps[swaps != tabu]
                if swaps.size:
                    v = self._pick(swaps, phase, penalties, rng)
                    row = self._row(v)
                    w = next(x for x in members if not row[x])
                    remove(w)
                    add(v)
                    tabu = w
                    penalties[members] += 1
                else:
                    v = int(rng.integers(m))
                    if phase == "penalty" or in_clique[v]:
                        restart(v)
                    else:
                        row = self._row(v)
                        for w in [x for x in members if not row[x]]:
                            remove(w)
                        add(v)
                    tabu = -1

            if (selection + 1) % PLS_PENALTY_DECAY == 0:
                np.maximum(penalties - 1, 0, out=penalties)
            if len(members) > len(best):
                best = list(members)
                if len(best) == m:
                    break
        return best

    def run(self, target: Optional[int] = None) -> PlsResult:
        if self.m == 0:
            return PlsResult(Clique(()), attempts_used=0, best_attempt=-1)
        best: List[int] = []
        best_attempt = -1
        used = 0
        for index in range(self.params.attempts):
            used += 1
            rng = np.random.default_rng(derive_seed(self.params.seed, index))
            found = self.attempt(rng)
            if len(found) > len(best):
                best, best_attempt = found, index
                self.logger.debug(f"Attempt {index}: clique of size {len(best)}")
            if target is not None and len(best) >= target:
                break
        return PlsResult(self.problem.clique_of(best), attempts_used=used, best_attempt=best_attempt)


def pls(inst: ProblemLike, params: Optional[PlsParams] = None, target: Optional[int] = None) -> Clique:
    """Largest clique over all attempts; reproducible for a fixed seed."""
    return PhasedLocalSearch(as_problem(inst), params or PlsParams()).run(target).clique
