"""Generation of the Pauli error sets searched for codes."""

import logging
from itertools import combinations, product as cartesian
from typing import Iterable, List, Optional, Sequence, Union

from ..models import ErrorSet, ErrorSetKind, PauliOp
from .operators import NAMED_PERMUTATIONS, check_letter_permutation, permute_letters, weight

logger = logging.getLogger(__name__)

PermSpec = Union[str, Sequence[str]]


def _ordered(n: int, keys: Iterable[tuple]) -> tuple:
    ops = [PauliOp(n, u, v) for u, v in set(keys)]
    ops.sort(key=lambda op: (weight(op), op.u, op.v))
    return tuple(ops)


def weight_k_ops(n: int, k: int) -> List[PauliOp]:
    """All operators of weight exactly k."""
    ops = []
    for support in combinations(range(n), k):
        for letters in cartesian("XYZ", repeat=k):
            u = v = 0
            for qubit, letter in zip(support, letters):
                if letter in "XY":
                    u |= 1 << qubit
                if letter in "YZ":
                    v |= 1 << qubit
            ops.append(PauliOp(n, u, v))
    return ops


def symmetric_error_set(n: int, d: int) -> ErrorSet:
    """All operators of weight at most d - 1."""
    if not 1 <= d <= n + 1:
        raise ValueError(f"Distance must be in 1..{n + 1}, got {d}")
    keys = [(op.u, op.v) for k in range(d) for op in weight_k_ops(n, k)]
    return ErrorSet(n, ErrorSetKind("symmetric", r=d - 1), _ordered(n, keys))


def _single_damping_keys(n: int) -> set:
    keys = {(0, 0)}
    for i in range(n):
        bit = 1 << i
        keys.update({(bit, 0), (bit, bit), (0, bit)})  # X, Y, Z
    for i, j in combinations(range(n), 2):
        pair = (1 << i) | (1 << j)
        keys.add((pair, 0))  # X_i X_j
        keys.add((pair, pair))  # Y_i Y_j
    for i in range(n):
        for j in range(n):
            if i != j:
                keys.add(((1 << i) | (1 << j), 1 << j))  # X_i Y_j
    return keys


def _resolve_perms(n: int, perm: PermSpec) -> List[str]:
    if isinstance(perm, str):
        if perm not in NAMED_PERMUTATIONS:
            raise ValueError(f"Unknown permutation {perm!r}, expected one of {sorted(NAMED_PERMUTATIONS)}")
        return [NAMED_PERMUTATIONS[perm]] * n
    return [check_letter_permutation(p) for p in perm]


def amp_damp_error_set(n: int, t: int = 1, perm: PermSpec = "id") -> ErrorSet:
    """Sufficient detection set for correcting t amplitude damping errors.

    t-fold phase-free products of the single-error set, deduplicated, with
    the letter permutation applied on every qubit afterwards.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if 2 * t > n:
        logger.warning(f"t={t} on n={n} qubits: the set covers every weight up to {n}")
    base = _single_damping_keys(n)
    keys = set(base)
    for _ in range(t - 1):
        keys = {(u1 ^ u2, v1 ^ v2) for u1, v1 in keys for u2, v2 in base}

    label = perm if isinstance(perm, str) else "custom"
    kind = ErrorSetKind("amp_damp", t=t, perm=label)
    error_set = ErrorSet(n, kind, _ordered(n, keys))
    perms = _resolve_perms(n, perm)
    if any(p != "XYZ" for p in perms):
        error_set = apply_qubit_permutations(error_set, perms, kind=kind)
    return error_set


def apply_qubit_permutations(
    e: ErrorSet,
    perms: Sequence[str],
    kind: Optional[ErrorSetKind] = None,
) -> ErrorSet:
    """Rewrite every operator letter-wise with one permutation per qubit."""
    perms = [check_letter_permutation(p) for p in perms]
    keys = set()
    for op in e.ops:
        image = permute_letters(op, perms)
        keys.add((image.u, image.v))
    if kind is None:
        kind = e.kind if all(p == "XYZ" for p in perms) else ErrorSetKind(
            e.kind.family, r=e.kind.r, t=e.kind.t, perm="custom")
    return ErrorSet(e.n, kind, _ordered(e.n, keys))


def parse_error_set_spec(spec: str, n: int, d: Optional[int] = None) -> ErrorSet:
    """Build an error set from ``symmetric[:d]`` or ``ad:t:{id|xz|yz}``."""
    parts = spec.strip().lower().split(":")
    if parts[0] == "symmetric":
        if len(parts) == 2:
            d = int(parts[1])
        if d is None:
            raise ValueError("A symmetric error set needs a distance (--d or symmetric:d)")
        return symmetric_error_set(n, d)
    if parts[0] == "ad" and len(parts) in (2, 3):
        t = int(parts[1])
        perm = parts[2] if len(parts) == 3 else "id"
        return amp_damp_error_set(n, t, perm)
    raise ValueError(f"Unrecognized error set spec {spec!r}")
