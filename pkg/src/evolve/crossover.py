"""Crossover and mutation operators on graphs and their bitstrings."""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..bitgraph import random_graph, spectral_bisection
from ..config import GA_UNIFORM_EXCHANGE_PROB
from ..models import CROSSOVER_KINDS, MUTATION_KINDS, Graph, edge_pairs
from ..rng import RngLike, as_rng
from .encoding import decode_bits, encode_bits

logger = logging.getLogger(__name__)


def crossover_bits(
    kind: str,
    parent1: np.ndarray,
    parent2: np.ndarray,
    rng: RngLike = None,
    exchange_prob: float = GA_UNIFORM_EXCHANGE_PROB,
    points: Optional[Sequence[int]] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """Exchange loci between two bitstrings.

    single_point swaps everything from the cut onwards, two_point swaps the
    slice between two cuts, uniform swaps each locus with ``exchange_prob``
    and random ignores the parents. ``points`` pins the cuts.
    """
    rng = as_rng(rng)
    a = np.asarray(parent1, dtype=np.uint8)
    b = np.asarray(parent2, dtype=np.uint8)
    if a.shape != b.shape:
        raise ValueError("Parents must have equal length")
    length = a.size

    swap = np.zeros(length, dtype=bool)
    if kind == "single_point":
        cut = points[0] if points else (int(rng.integers(1, length)) if length > 1 else 0)
        swap[cut:] = True
    elif kind == "two_point":
        if points:
            lo, hi = sorted(points[:2])
        else:
            lo, hi = sorted(int(x) for x in rng.choice(length + 1, size=2, replace=False))
        swap[lo:hi] = True
    elif kind == "uniform":
        swap = rng.random(length) < exchange_prob
    elif kind == "random":
        return (rng.integers(0, 2, size=length).astype(np.uint8),
                rng.integers(0, 2, size=length).astype(np.uint8))
    else:
        raise ValueError(f"Unknown bitstring crossover {kind!r}")
    return np.where(swap, b, a), np.where(swap, a, b)


def _assemble(keep: Graph, keep_nodes: Sequence[int], donor: Graph, donor_nodes: Sequence[int]) -> Tuple[List[int], List[int], List[int], List[int]]:
    """Child rows holding keep's fragment in place and donor's fragment in the free slots.

    Returns (rows, slot targets for the donor nodes, deficits of the kept side, deficits of the donor side).
    """
    n = keep.n
    kept = set(keep_nodes)
    slots = [v for v in range(n) if v not in kept]
    place = dict(zip(donor_nodes, slots))
    rows = [0] * n
    for i in keep_nodes:
        for j in keep_nodes:
            if i != j and keep.has_edge(i, j):
                rows[i] |= 1 << j
    for i in donor_nodes:
        for j in donor_nodes:
            if i != j and donor.has_edge(i, j):
                rows[place[i]] |= 1 << place[j]
    keep_deficit = [keep.degree(v) - rows[v].bit_count() for v in keep_nodes]
    donor_deficit = [donor.degree(v) - rows[place[v]].bit_count() for v in donor_nodes]
    return rows, slots, keep_deficit, donor_deficit


def _join_fragments(rows: List[int], left: List[int], right: List[int],
                    left_def: List[int], right_def: List[int], rng: np.random.Generator):
    """Add cross edges by degree deficit until one side is satisfied."""
    left_def = np.array(left_def, dtype=np.int64)
    right_def = np.array(right_def, dtype=np.int64)
    stranded = np.zeros_like(left_def)  # units with no eligible partner left
    while left_def.sum() > 0 and right_def.sum() > 0:
        a = int(rng.choice(len(left), p=left_def / left_def.sum()))
        eligible = np.array([right_def[k] if not (rows[left[a]] >> right[k]) & 1 else 0
                             for k in range(len(right))], dtype=np.int64)
        if eligible.sum() == 0:
            stranded[a] += left_def[a]
            left_def[a] = 0
            continue
        b = int(rng.choice(len(right), p=eligible / eligible.sum()))
        i, j = left[a], right[b]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        left_def[a] -= 1
        right_def[b] -= 1

    if stranded.any():
        logger.debug(f"{int(stranded.sum())} deficit units had no eligible partner")

    # Whatever remains on one side is spent on coin flips against the other.
    for pending, done, deficits in ((left, right, left_def + stranded), (right, left, right_def)):
        for k, units in enumerate(deficits):
            for _ in range(int(units)):
                if rng.random() < 0.5:
                    j = done[int(rng.integers(len(done)))]
                    rows[pending[k]] |= 1 << j
                    rows[j] |= 1 << pending[k]


def _spectral_child(keep: Graph, keep_nodes: Sequence[int], donor: Graph,
                    donor_nodes: Sequence[int], rng: np.random.Generator) -> Graph:
    rows, slots, keep_def, donor_def = _assemble(keep, keep_nodes, donor, donor_nodes)
    _join_fragments(rows, list(keep_nodes), slots, keep_def, donor_def, rng)
    return Graph(keep.n, tuple(rows))


def crossover_spectral(p1: Graph, p2: Graph, rng: RngLike = None) -> Tuple[Graph, Graph]:
    """Recombine spectral-bisection fragments of two parents.

    child1 keeps p1's first part in place and receives p2's second part in
    the remaining slots, ascending; child2 mirrors this. Cross edges follow
    the degree each node had in its original parent.
    """
    if p1.n != p2.n:
        raise ValueError("Parents must have the same number of nodes")
    if p1.n < 2:
        raise ValueError("Spectral crossover needs at least two nodes")
    rng = as_rng(rng)
    split1 = spectral_bisection(p1)
    split2 = spectral_bisection(p2)
    child1 = _spectral_child(p1, split1.part1, p2, split2.part2, rng)
    child2 = _spectral_child(p2, split2.part1, p1, split1.part2, rng)
    return child1, child2


def crossover_graphs(kind: str, p1: Graph, p2: Graph, rng: RngLike = None,
                     exchange_prob: float = GA_UNIFORM_EXCHANGE_PROB) -> Tuple[Graph, Graph]:
    if kind not in CROSSOVER_KINDS:
        raise ValueError(f"Unknown crossover kind {kind!r}")
    rng = as_rng(rng)
    if kind == "spectral":
        return crossover_spectral(p1, p2, rng)
    if kind == "random":
        return random_graph(p1.n, rng), random_graph(p1.n, rng)
    c1, c2 = crossover_bits(kind, encode_bits(p1), encode_bits(p2), rng, exchange_prob)
    return decode_bits(c1, p1.n), decode_bits(c2, p1.n)


def mutate(g: Graph, rng: RngLike = None, kind: str = "toggle") -> Graph:
    """Toggle one uniformly chosen pair, or flip each pair with probability 1/C(n,2)."""
    if g.n < 2:
        raise ValueError("Mutation needs at least two nodes")
    if kind not in MUTATION_KINDS:
        raise ValueError(f"Unknown mutation kind {kind!r}")
    rng = as_rng(rng)
    pairs = edge_pairs(g.n)
    if kind == "toggle":
        i, j = pairs[int(rng.integers(len(pairs)))]
        return g.toggle_edge(i, j)
    bits = encode_bits(g)
    flips = rng.random(bits.size) < 1.0 / bits.size
    return decode_bits(bits ^ flips.astype(np.uint8), g.n)
