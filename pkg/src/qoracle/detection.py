"""Quantum-side checks of graph states and the CWS detection criterion."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from ..models import ErrorSet, Graph, PauliOp
from .statevector import _basis, _parity, apply_pauli, graph_state

logger = logging.getLogger(__name__)

GaussianRational = Tuple[Fraction, Fraction]


@dataclass
class DetectionResult:
    ok: bool
    table: Dict[str, GaussianRational] = field(default_factory=dict)  # C_E per operator
    violation: Optional[Tuple[str, int, int]] = None  # (operator, x_i, x_j)


def _word_matrix(g: Graph, words: Tuple[int, ...]) -> np.ndarray:
    """Rows are the real amplitude vectors of Z^x |G>."""
    state = graph_state(g)
    xs = _basis(g.n)
    return np.stack([state.re * (1 - 2 * _parity(xs & x)) for x in words])


def detection_check(g: Graph, codewords: Iterable[int], e: ErrorSet) -> DetectionResult:
    """Check <W_i|E|W_j> = C_E delta_ij for every E in e, exactly.

    Graph-state amplitudes and Z words are real, so X^u Z^v keeps them real
    and the i^|u&v| phase of the letter form factors out of each Gram matrix.
    """
    if g.n != e.n:
        raise ValueError(f"Graph has {g.n} nodes but the error set acts on {e.n} qubits")
    words = tuple(sorted(set(int(x) for x in codewords)))
    if not words:
        raise ValueError("At least one codeword is required")
    n = g.n
    W = _word_matrix(g, words)
    xs = _basis(n)
    scale = 1 << n

    result = DetectionResult(ok=True)
    for op in e.ops:
        sign = 1 - 2 * _parity(xs & op.v)
        moved = (W * sign)[:, xs ^ op.u]
        gram = W @ moved.T  # <W_i| X^u Z^v |W_j>
        diagonal = gram.diagonal()
        off = gram - np.diag(diagonal)
        value = Fraction(int(diagonal[0]), scale)
        power = (op.u & op.v).bit_count() % 4
        c_e = [(value, Fraction(0)), (Fraction(0), value), (-value, Fraction(0)), (Fraction(0), -value)][power]
        result.table[op.to_string()] = c_e

        if result.violation is None:
            if off.any():
                i, j = (int(k) for k in np.argwhere(off)[0])
                result.violation = (op.to_string(), words[i], words[j])
            elif (diagonal != diagonal[0]).any():
                i = int(np.flatnonzero(diagonal != diagonal[0])[0])
                result.violation = (op.to_string(), words[i], words[i])
    result.ok = result.violation is None
    if not result.ok:
        logger.debug(f"Oracle rejects the code: {result.violation}")
    return result


def stabilizer_check(g: Graph) -> bool:
    """M_i |G> = |G> for every generator M_i = X_i Z_N(i)."""
    state = graph_state(g)
    return all(apply_pauli(state, PauliOp(g.n, 1 << i, g.adj[i])) == state for i in range(g.n))


def xz_rule_check(g: Graph) -> bool:
    """X_i |G> = Z^(row i) |G> for every node i."""
    state = graph_state(g)
    return all(
        apply_pauli(state, PauliOp(g.n, 1 << i, 0)) == apply_pauli(state, PauliOp(g.n, 0, g.adj[i]))
        for i in range(g.n)
    )


def basis_orthonormality_check(g: Graph, words: Optional[Iterable[int]] = None) -> bool:
    """<Z^a G|Z^b G> = 2^n delta_ab over ``words`` (all of GF(2)^n by default)."""
    words = tuple(range(1 << g.n)) if words is None else tuple(words)
    W = _word_matrix(g, words)
    return bool(np.array_equal(W @ W.T, (1 << g.n) * np.eye(len(words), dtype=np.int64)))
