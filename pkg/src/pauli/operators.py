"""Phase-free symplectic arithmetic on Pauli operators."""

from typing import Dict, Sequence

from ..models import PauliOp

# A letter permutation lists the images of X, Y and Z in that order.
IDENTITY_PERM = "XYZ"
NAMED_PERMUTATIONS: Dict[str, str] = {
    "id": "XYZ",
    "xy": "YXZ",
    "xz": "ZYX",
    "yz": "XZY",
}


def weight(p: PauliOp) -> int:
    return (p.u | p.v).bit_count()


def product(p: PauliOp, q: PauliOp) -> PauliOp:
    if p.n != q.n:
        raise ValueError(f"Qubit counts differ: {p.n} vs {q.n}")
    return PauliOp(p.n, p.u ^ q.u, p.v ^ q.v)


def commutes(p: PauliOp, q: PauliOp) -> bool:
    """True iff the symplectic product u_p.v_q + v_p.u_q vanishes over GF(2)."""
    if p.n != q.n:
        raise ValueError(f"Qubit counts differ: {p.n} vs {q.n}")
    return ((p.u & q.v).bit_count() + (p.v & q.u).bit_count()) % 2 == 0


def check_letter_permutation(perm: str) -> str:
    perm = perm.upper()
    if sorted(perm) != ["X", "Y", "Z"]:
        raise ValueError(f"{perm!r} is not a permutation of XYZ")
    return perm


def permute_letters(p: PauliOp, perms: Sequence[str]) -> PauliOp:
    """Rewrite qubit k's letter through perms[k]; identity letters stay put."""
    if len(perms) != p.n:
        raise ValueError(f"Need {p.n} letter permutations, got {len(perms)}")
    u = v = 0
    for k, perm in enumerate(perms):
        letter = p.letter(k)
        if letter == "I":
            continue
        image = perm["XYZ".index(letter)]
        if image in "XY":
            u |= 1 << k
        if image in "YZ":
            v |= 1 << k
    return PauliOp(p.n, u, v)
