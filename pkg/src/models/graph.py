"""Data models for bit-packed graphs."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from ..config import MAX_NODES


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on n <= 16 nodes.

    Row i of ``adj`` is a bitmask whose bit j is set iff edge {i, j} exists.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_NODES:
            raise ValueError(f"Graph order must be in 1..{MAX_NODES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or (row >> i) & 1:
                raise ValueError(f"Row {i} has bits outside the node range or on the diagonal")
            rest = row
            while rest:
                j = (rest & -rest).bit_length() - 1
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"Adjacency not symmetric at ({i}, {j})")
                rest &= rest - 1

    # Construction

    @staticmethod
    def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"Invalid edge ({i}, {j}) for n={n}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full & ~(1 << i) for i in range(n)))

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise ValueError("A cycle needs at least 3 nodes")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def from_code(n: int, code: int) -> "Graph":
        """Inverse of ``to_code``."""
        pairs = edge_pairs(n)
        m = len(pairs)
        if code < 0 or code >> m:
            raise ValueError(f"Code {code} out of range for n={n}")
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if (code >> (m - 1 - k)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    # Queries

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, j in edge_pairs(self.n) if (self.adj[i] >> j) & 1]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> List[int]:
        return [j for j in range(self.n) if (self.adj[v] >> j) & 1]

    def to_code(self) -> int:
        """Upper-triangle bits, row-major, first pair (0,1) most significant.

        Lexicographic order of the bitstring equals integer order of the code.
        """
        code = 0
        for i, j in edge_pairs(self.n):
            code = (code << 1) | ((self.adj[i] >> j) & 1)
        return code

    def components(self) -> List[List[int]]:
        seen = 0
        result = []
        for start in range(self.n):
            if (seen >> start) & 1:
                continue
            comp = 1 << start
            frontier = comp
            while frontier:
                reach = 0
                rest = frontier
                while rest:
                    v = (rest & -rest).bit_length() - 1
                    reach |= self.adj[v]
                    rest &= rest - 1
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            result.append([v for v in range(self.n) if (comp >> v) & 1])
        return result

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # Derived graphs

    def toggle_edge(self, i: int, j: int) -> "Graph":
        if i == j:
            raise ValueError("Cannot toggle a self-loop")
        rows = list(self.adj)
        rows[i] ^= 1 << j
        rows[j] ^= 1 << i
        return Graph(self.n, tuple(rows))

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Relabel node i as perm[i]."""
        rows = [0] * self.n
        for i, j in self.edges():
            a, b = perm[i], perm[j]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    def induced(self, nodes: Sequence[int]) -> "Graph":
        """Subgraph induced by ``nodes``, relabeled 0..k-1 in the given order."""
        index = {v: k for k, v in enumerate(nodes)}
        edges = [(index[i], index[j]) for i, j in self.edges() if i in index and j in index]
        return Graph.from_edges(len(nodes), edges)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adj)))


@dataclass(frozen=True)
class Bisection:
    """Split of the node set with |part1| = floor(n/2)."""

    part1: Tuple[int, ...]
    part2: Tuple[int, ...]
    cut_size: int


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labeling result; isomorphic graphs share ``canon_bits``."""

    canon_bits: int
    aut_size: int
    n: int

    def bitstring(self) -> str:
        m = self.n * (self.n - 1) // 2
        return format(self.canon_bits, f"0{m}b") if m else ""


@dataclass(frozen=True)
class GraphClass:
    """One isomorphism or LC-isomorphism class of labeled graphs."""

    representative: Graph
    class_size: int  # labeled graphs in the class
    aut_size: int  # of the representative
    iso_classes: int  # isomorphism classes contained (1 for the isomorphism relation)


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """Upper-triangle pairs in row-major order (0,1), (0,2), ..., (n-2,n-1)."""
    return tuple(combinations(range(n), 2))
