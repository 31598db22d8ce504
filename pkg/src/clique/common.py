"""Indexed adjacency views shared by the clique solvers."""

from abc import ABC, abstractmethod
from typing import Dict, Iterable, Iterator, List, Tuple, Union

import numpy as np

from ..config import MATERIALIZE_MAX_NODES
from ..models import Clique, CliqueInstance

BRUTE_FORCE_MAX_NODES = 20


class CliqueProblem(ABC):
    """Nodes 0..m-1 carrying external labels, with a symmetric edge relation."""

    def __init__(self, labels: np.ndarray):
        self.labels = np.asarray(labels, dtype=np.int64)
        self._index: Dict[int, int] = {}

    def __len__(self):
        return int(self.labels.size)

    @abstractmethod
    def adjacency_row(self, i: int) -> np.ndarray:
        """Boolean neighbor mask of node i (False on the diagonal)."""

    def adjacency_matrix(self) -> np.ndarray:
        return np.stack([self.adjacency_row(i) for i in range(len(self))]) if len(self) else np.zeros((0, 0), bool)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency_row(i)[j])

    def degrees(self) -> np.ndarray:
        return np.array([int(self.adjacency_row(i).sum()) for i in range(len(self))], dtype=np.int64)

    def bitset_rows(self) -> List[int]:
        """Rows as Python int bitsets, bit j set iff i ~ j."""
        rows = []
        for i in range(len(self)):
            packed = np.packbits(self.adjacency_row(i), bitorder="little")
            rows.append(int.from_bytes(packed.tobytes(), "little"))
        return rows

    def edges(self) -> Iterator[Tuple[int, int]]:
        for i in range(len(self)):
            for j in np.flatnonzero(self.adjacency_row(i)[i + 1:]):
                yield i, i + 1 + int(j)

    def index_of(self, label: int) -> int:
        if not self._index:
            self._index = {int(x): k for k, x in enumerate(self.labels)}
        try:
            return self._index[int(label)]
        except KeyError:
            raise ValueError(f"{label} is not a node of this instance") from None

    def clique_of(self, indices: Iterable[int]) -> Clique:
        return Clique(tuple(sorted(int(self.labels[i]) for i in indices)))


class XorProblem(CliqueProblem):
    """Adjacency x ~ y iff x XOR y is not a forbidden difference."""

    def __init__(self, inst: CliqueInstance):
        super().__init__(inst.nodes)
        self.instance = inst
        self._matrix = None

    def adjacency_row(self, i: int) -> np.ndarray:
        if self._matrix is not None:
            return self._matrix[i]
        row = ~self.instance.forbidden[self.labels ^ self.labels[i]]
        row[i] = False
        return row

    def adjacency_matrix(self) -> np.ndarray:
        if self._matrix is None:
            if len(self) > MATERIALIZE_MAX_NODES:
                raise ValueError(f"Refusing to materialize a {len(self)}-node adjacency matrix")
            matrix = ~self.instance.forbidden[self.labels[:, None] ^ self.labels[None, :]]
            np.fill_diagonal(matrix, False)
            self._matrix = matrix
        return self._matrix

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and not self.instance.forbidden[self.labels[i] ^ self.labels[j]]

    def degrees(self) -> np.ndarray:
        # Each forbidden difference c removes the edge x ~ x^c when x^c is a node.
        present = np.zeros(self.instance.forbidden.size, dtype=bool)
        present[self.labels] = True
        lost = np.zeros(len(self), dtype=np.int64)
        for c in np.flatnonzero(self.instance.forbidden):
            lost += present[self.labels ^ c]
        return (len(self) - 1) - lost


class ExplicitProblem(CliqueProblem):
    """Instance given by an explicit adjacency matrix, e.g. from a DIMACS file."""

    def __init__(self, labels: np.ndarray, matrix: np.ndarray):
        super().__init__(labels)
        matrix = np.asarray(matrix, dtype=bool)
        if matrix.shape != (len(self), len(self)):
            raise ValueError("Adjacency matrix shape does not match the labels")
        if (matrix != matrix.T).any() or matrix.diagonal().any():
            raise ValueError("Adjacency matrix must be symmetric with an empty diagonal")
        self.matrix = matrix

    @staticmethod
    def from_edges(num_nodes: int, edges: Iterable[Tuple[int, int]]) -> "ExplicitProblem":
        matrix = np.zeros((num_nodes, num_nodes), dtype=bool)
        for i, j in edges:
            if i != j:
                matrix[i, j] = matrix[j, i] = True
        return ExplicitProblem(np.arange(num_nodes, dtype=np.int64), matrix)

    def adjacency_row(self, i: int) -> np.ndarray:
        return self.matrix[i]

    def adjacency_matrix(self) -> np.ndarray:
        return self.matrix

    def degrees(self) -> np.ndarray:
        return self.matrix.sum(axis=1).astype(np.int64)


ProblemLike = Union[CliqueInstance, CliqueProblem]


def as_problem(inst: ProblemLike) -> CliqueProblem:
    if isinstance(inst, CliqueProblem):
        return inst
    if isinstance(inst, CliqueInstance):
        return XorProblem(inst)
    raise TypeError(f"Cannot solve a clique problem on {type(inst).__name__}")


def is_clique(inst: ProblemLike, members: Iterable[int]) -> bool:
    """Pairwise adjacency check; members are node labels."""
    problem = as_problem(inst)
    indices = [problem.index_of(x) for x in members]
    if len(set(indices)) != len(indices):
        return False
    for a, i in enumerate(indices):
        for j in indices[a + 1:]:
            if not problem.adjacent(i, j):
                return False
    return True


def brute_force_max_clique(inst: ProblemLike) -> Clique:
    """Maximum clique by enumerating every clique; small instances only."""
    problem = as_problem(inst)
    m = len(problem)
    if m > BRUTE_FORCE_MAX_NODES:
        raise ValueError(f"Brute force is limited to {BRUTE_FORCE_MAX_NODES} nodes, got {m}")
    rows = problem.bitset_rows()
    best = 0

    def extend(members: int, candidates: int):
        nonlocal best
        if members.bit_count() > best.bit_count():
            best = members
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            extend(members | (1 << v), candidates & rows[v])

    extend(0, (1 << m) - 1)
    return problem.clique_of(i for i in range(m) if (best >> i) & 1)
