"""Map Pauli error sets through a graph onto classical error sets."""

import logging
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from ..config import MAX_NODES
from ..models import ClassicalErrorData, CliqueInstance, ErrorSet, Graph, PauliOp

logger = logging.getLogger(__name__)


class CliqueGraphOrder(NamedTuple):
    order: int  # |N_E|, nodes of the clique graph
    annihilator_dim: int  # r, with |N_E| = 2^r - |Cl_G(E) within the annihilator|


def parity(values: np.ndarray) -> np.ndarray:
    """GF(2) parity of each non-negative integer (up to 32 bits)."""
    x = np.asarray(values, dtype=np.int64).copy()
    for shift in (16, 8, 4, 2, 1):
        x ^= x >> shift
    return x & 1


def _check(g: Graph, n: int):
    if g.n != n:
        raise ValueError(f"Graph has {g.n} nodes but the operators act on {n} qubits")


def cl_map(g: Graph, p: PauliOp) -> int:
    """Cl_G(X^u Z^v) = v + u Gamma over GF(2)."""
    _check(g, p.n)
    out = p.v
    rest = p.u
    while rest:
        i = (rest & -rest).bit_length() - 1
        out ^= g.adj[i]
        rest &= rest - 1
    return out


def cl_values(g: Graph, e: ErrorSet) -> np.ndarray:
    """Cl_G of every operator of ``e``, in the error set's order."""
    _check(g, e.n)
    u = e.u_array
    out = e.v_array.copy()
    for i, row in enumerate(g.adj):
        out ^= np.where(((u >> i) & 1) == 1, row, 0)
    return out


def _span_basis(masks: Sequence[int]) -> List[Tuple[int, int]]:
    """Fully reduced echelon basis of the GF(2) span of ``masks``.

    Returns (pivot bit, row) pairs; each pivot bit is set in its own row only.
    """
    basis: List[Tuple[int, int]] = []  # (pivot bit, row)
    for m in masks:
        for pivot, row in basis:
            if (m >> pivot) & 1:
                m ^= row
        if not m:
            continue
        pivot = m.bit_length() - 1
        basis = [(q, row ^ m if (row >> pivot) & 1 else row) for q, row in basis]
        basis.append((pivot, m))
    return sorted(basis, reverse=True)


def _null_space(basis: List[Tuple[int, int]], n: int) -> Tuple[int, ...]:
    """Basis of {x : x.row = 0 for every row} of a fully reduced basis."""
    pivots = dict(basis)
    out = []
    for free in range(n):
        if free in pivots:
            continue
        x = 1 << free
        for pivot, row in pivots.items():
            if (row >> free) & 1:
                x |= 1 << pivot
        out.append(x)
    return tuple(out)


def classical_error_data(g: Graph, e: ErrorSet) -> ClassicalErrorData:
    n = e.n
    if n > MAX_NODES:
        raise ValueError(f"n={n} exceeds the supported maximum of {MAX_NODES}")
    cl = cl_values(g, e)
    size = 1 << n

    cl_mask = np.zeros(size, dtype=bool)
    cl_mask[cl] = True

    degenerate = np.flatnonzero((cl == 0) & (e.u_array != 0))
    degenerate_ops = tuple(e.ops[i] for i in degenerate)
    basis = _span_basis(sorted({op.u for op in degenerate_ops}))

    d_mask = np.zeros(size, dtype=bool)
    if basis:
        xs = np.arange(size, dtype=np.int64)
        for _, row in basis:
            d_mask |= parity(xs & row) == 1
    return ClassicalErrorData(
        n=n,
        cl_mask=cl_mask,
        d_mask=d_mask,
        degenerate_ops=degenerate_ops,
        annihilator_basis=_null_space(basis, n),
    )


def clique_instance(g: Graph, e: ErrorSet) -> CliqueInstance:
    """Admissible nonzero codewords, adjacent when their sum avoids Cl_G(E)."""
    data = classical_error_data(g, e)
    excluded = data.cl_mask | data.d_mask
    nodes = np.flatnonzero(~excluded).astype(np.int64)
    forbidden = data.cl_mask.copy()
    forbidden[0] = False
    logger.debug(f"Clique instance: {nodes.size} nodes, {int(forbidden.sum())} forbidden differences")
    return CliqueInstance(n=e.n, nodes=nodes, forbidden=forbidden)


def clique_graph_order(g: Graph, e: ErrorSet) -> CliqueGraphOrder:
    """Order of the clique graph, without building its edges."""
    data = classical_error_data(g, e)
    excluded = int(np.count_nonzero(data.cl_mask | data.d_mask))
    return CliqueGraphOrder(order=(1 << e.n) - excluded, annihilator_dim=data.annihilator_dim)
