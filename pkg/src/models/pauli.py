"""Data models for phase-free Pauli operators and error sets."""

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

LETTERS = "IXZY"  # indexed by (x_bit | z_bit << 1)


@dataclass(frozen=True, order=True)
class PauliOp:
    """n-qubit Pauli operator X^u Z^v with the phase dropped."""

    n: int
    u: int  # X part
    v: int  # Z part

    def __post_init__(self):
        full = (1 << self.n) - 1
        if (self.u | self.v) & ~full:
            raise ValueError(f"Pauli masks exceed {self.n} qubits")

    @staticmethod
    def identity(n: int) -> "PauliOp":
        return PauliOp(n, 0, 0)

    @staticmethod
    def from_string(text: str) -> "PauliOp":
        """Parse a letter string; character k acts on qubit k."""
        u = v = 0
        for k, ch in enumerate(text.upper()):
            if ch in "XY":
                u |= 1 << k
            if ch in "ZY":
                v |= 1 << k
            if ch not in "IXYZ":
                raise ValueError(f"Invalid Pauli letter {ch!r} at position {k}")
        return PauliOp(len(text), u, v)

    def letter(self, qubit: int) -> str:
        return LETTERS[((self.u >> qubit) & 1) | (((self.v >> qubit) & 1) << 1)]

    def to_string(self) -> str:
        return "".join(self.letter(k) for k in range(self.n))


@dataclass(frozen=True)
class ErrorSetKind:
    """Generation rule of an error set."""

    family: str  # "symmetric" or "amp_damp"
    r: int = 0  # maximum weight of a symmetric set (d - 1)
    t: int = 0  # amplitude damping errors
    perm: str = "id"  # "id", "xz", "yz" or "custom"

    @property
    def max_weight(self) -> int:
        return self.r if self.family == "symmetric" else 2 * self.t

    @property
    def descriptor(self) -> str:
        if self.family == "symmetric":
            return f"symmetric:{self.r + 1}"
        return f"ad:{self.t}:{self.perm}"


@dataclass(frozen=True, eq=False)
class ErrorSet:
    """Deduplicated Pauli error set containing the identity exactly once."""

    n: int
    kind: ErrorSetKind
    ops: Tuple[PauliOp, ...]
    label: Optional[str] = field(default=None)

    def __post_init__(self):
        keys = {(op.u, op.v) for op in self.ops}
        if len(keys) != len(self.ops):
            raise ValueError("Error set contains duplicate operators")
        if (0, 0) not in keys:
            raise ValueError("Error set must contain the identity")

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __eq__(self, other):
        if not isinstance(other, ErrorSet):
            return False
        return self.n == other.n and self.keys() == other.keys()

    def __hash__(self):
        return hash((self.n, self.keys()))

    def keys(self) -> frozenset:
        return frozenset((op.u, op.v) for op in self.ops)

    @cached_property
    def u_array(self) -> np.ndarray:
        return np.fromiter((op.u for op in self.ops), dtype=np.int64, count=len(self.ops))

    @cached_property
    def v_array(self) -> np.ndarray:
        return np.fromiter((op.v for op in self.ops), dtype=np.int64, count=len(self.ops))

    def canonical_text(self) -> str:
        """One operator per line over {I,X,Y,Z}, sorted lexicographically."""
        return "\n".join(sorted(op.to_string() for op in self.ops)) + "\n"

    @cached_property
    def content_hash(self) -> str:
        return hashlib.sha256(self.canonical_text().encode("ascii")).hexdigest()

    @property
    def descriptor(self) -> str:
        return self.label or self.kind.descriptor
