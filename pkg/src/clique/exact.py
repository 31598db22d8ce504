"""Exact maximum clique by branch and bound with greedy coloring bounds."""

import logging
from typing import List, Optional, Tuple

import numpy as np

from ..config import EXACT_MAX_NODES
from ..models import Clique
from .common import ProblemLike, as_problem

logger = logging.getLogger(__name__)


class InstanceTooLargeError(ValueError):
    """Instance exceeds the exact solver's node limit."""

    def __init__(self, nodes: int, limit: int):
        super().__init__(f"{nodes} nodes exceeds the exact solver limit of {limit}; use PLS instead")
        self.nodes = nodes
        self.limit = limit


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _color_sort(candidates: int, adj: List[int]) -> Tuple[List[int], List[int]]:
    """Greedy sequential coloring in index order; colors are non-decreasing."""
    order = []
    colors = []
    color = 0
    remaining = candidates
    while remaining:
        color += 1
        available = remaining
        while available:
            v = _lsb_index(available)
            order.append(v)
            colors.append(color)
            remaining &= ~(1 << v)
            available &= ~(1 << v)
            available &= ~adj[v]
    return order, colors


class MaxCliqueSolver:
    """Branch and bound over bitsets, nodes relabeled by descending degree."""

    def __init__(self, adj: List[int]):
        self.adj = adj
        self.n = len(adj)
        self.best_size = 0
        self.best_bits = 0
        self.nodes_expanded = 0

    def solve(self) -> List[int]:
        self.best_size = 0
        self.best_bits = 0
        self.nodes_expanded = 0
        if self.n:
            self._expand(0, 0, (1 << self.n) - 1)
        bits = self.best_bits
        out = []
        while bits:
            out.append(_lsb_index(bits))
            bits &= bits - 1
        return out

    def _expand(self, size: int, members: int, candidates: int):
        order, colors = _color_sort(candidates, self.adj)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= self.best_size:
                return
            v = order[i]
            self.nodes_expanded += 1
            grown = members | (1 << v)
            narrowed = candidates & self.adj[v]
            if narrowed:
                self._expand(size + 1, grown, narrowed)
            elif size + 1 > self.best_size:
                self.best_size = size + 1
                self.best_bits = grown
            candidates &= ~(1 << v)


def max_clique_exact(inst: ProblemLike, max_nodes: Optional[int] = None) -> Clique:
    """A maximum clique; deterministic for a given node order."""
    problem = as_problem(inst)
    limit = EXACT_MAX_NODES if max_nodes is None else max_nodes
    m = len(problem)
    if m > limit:
        raise InstanceTooLargeError(m, limit)
    if m == 0:
        return Clique(())

    degrees = problem.degrees()
    order = np.argsort(-degrees, kind="stable")  # new index -> old index
    matrix = problem.adjacency_matrix()[np.ix_(order, order)]
    packed = np.packbits(matrix, axis=1, bitorder="little")
    relabeled = [int.from_bytes(row.tobytes(), "little") for row in packed]

    solver = MaxCliqueSolver(relabeled)
    found = solver.solve()
    logger.debug(f"Exact search: omega={len(found)} after {solver.nodes_expanded} expansions")
    return problem.clique_of(int(order[v]) for v in found)
