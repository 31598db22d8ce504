"""Elementary graph operations: local complementation, cuts, random graphs."""

from itertools import combinations
from typing import Iterable

from ..models import Bisection, Graph, edge_pairs
from ..rng import RngLike, as_rng


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the subgraph induced by the neighborhood of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"Node {v} out of range for n={g.n}")
    hood = g.adj[v]
    rows = list(g.adj)
    rest = hood
    while rest:
        i = (rest & -rest).bit_length() - 1
        rows[i] ^= hood & ~(1 << i)
        rest &= rest - 1
    return Graph(g.n, tuple(rows))


def cut_size(g: Graph, part: Iterable[int]) -> int:
    """Edges with exactly one endpoint in ``part``."""
    mask = 0
    for v in part:
        mask |= 1 << v
    return sum((g.adj[v] & ~mask).bit_count() for v in range(g.n) if (mask >> v) & 1)


def random_graph(n: int, rng: RngLike = None) -> Graph:
    """Uniform sample from all labeled graphs on n nodes."""
    rng = as_rng(rng)
    pairs = edge_pairs(n)
    if not pairs:
        return Graph.empty(n)
    bits = rng.integers(0, 2, size=len(pairs))
    return Graph.from_edges(n, [pair for pair, bit in zip(pairs, bits) if bit])


def brute_force_min_bisection(g: Graph) -> Bisection:
    """Smallest cut over every floor(n/2)-subset; first found wins ties."""
    if g.n > 12:
        raise ValueError(f"Brute-force bisection is limited to 12 nodes, got {g.n}")
    half = g.n // 2
    best = None
    for part1 in combinations(range(g.n), half):
        cut = cut_size(g, part1)
        if best is None or cut < best[1]:
            best = (part1, cut)
    part1, cut = best
    part2 = tuple(v for v in range(g.n) if v not in part1)
    return Bisection(part1=tuple(part1), part2=part2, cut_size=cut)
