"""Data models for the graph-to-classical mapping and CWS codes."""

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from .graph import Graph
from .pauli import PauliOp


@dataclass(frozen=True, eq=False)
class ClassicalErrorData:
    """Cl_G(E) and D_G(E) for one (graph, error set) pair.

    Both sets are held as boolean masks over GF(2)^n, indexed by the integer
    value of the bit vector (bit k = qubit k).
    """

    n: int
    cl_mask: np.ndarray
    d_mask: np.ndarray
    degenerate_ops: Tuple[PauliOp, ...]
    annihilator_basis: Tuple[int, ...]  # basis of the subspace GF(2)^n minus D_G

    @property
    def cl_set(self) -> FrozenSet[int]:
        return frozenset(int(x) for x in np.flatnonzero(self.cl_mask))

    @property
    def d_set(self) -> FrozenSet[int]:
        return frozenset(int(x) for x in np.flatnonzero(self.d_mask))

    @property
    def annihilator_dim(self) -> int:
        return len(self.annihilator_basis)

    @property
    def pure(self) -> bool:
        return not self.d_mask.any()


@dataclass(frozen=True, eq=False)
class CliqueInstance:
    """Clique problem whose nodes are admissible codewords.

    Two nodes are adjacent iff their XOR is not marked in ``forbidden``.
    """

    n: int
    nodes: np.ndarray  # ascending int64 bit vectors, 0 excluded
    forbidden: np.ndarray  # bool mask over 2^n marking Cl_G(E) minus {0}

    def __len__(self):
        return int(self.nodes.size)

    def adjacent(self, x: int, y: int) -> bool:
        return x != y and not self.forbidden[x ^ y]


@dataclass(frozen=True)
class Violation:
    """First detection-condition failure found by a verifier."""

    op: str  # error operator as letters
    x_i: int
    x_j: int
    condition: int  # 1: off-diagonal, 3: diagonal (degenerate error)

    def describe(self, n: int) -> str:
        a = format_word(self.x_i, n)
        b = format_word(self.x_j, n)
        if self.condition == 1:
            return f"error {self.op} maps codeword {a} onto codeword {b}"
        return f"degenerate error {self.op} anticommutes with codeword {a}"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    pure: bool
    violation: Optional[Violation] = None


@dataclass(frozen=True)
class CwsCode:
    """Standard-form CWS code: a graph plus a classical code containing 0."""

    graph: Graph
    codewords: Tuple[int, ...]  # ascending, 0 first
    error_set_hash: str
    pure: bool

    @property
    def K(self) -> int:
        return len(self.codewords)


def format_word(x: int, n: int) -> str:
    """n-character binary string, character k = bit k."""
    return "".join("1" if (x >> k) & 1 else "0" for k in range(n))


def parse_word(text: str) -> int:
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"Not a binary word: {text!r}")
    return sum(1 << k for k, ch in enumerate(text) if ch == "1")


@dataclass(frozen=True)
class StandardForm:
    """Stabilizer generators of the graph state plus the word operators."""

    generators: Tuple[str, ...]  # M_i = X_i Z_N(i), over {I,X,Z}
    word_operators: Tuple[str, ...]  # W_x = Z^x, over {I,Z}


@dataclass(frozen=True)
class CodeFile:
    """Parsed contents of a code file, before the error set is resolved."""

    n: int
    graph6: str
    errorset: str  # descriptor such as symmetric:2, or a 64-hex content hash
    K: int
    codewords: Tuple[int, ...]
