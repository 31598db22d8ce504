"""Linear programming bound on the dimension of ((n,K,d)) codes."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, List, Optional, Tuple, Union

from ..config import LP_BISECTION_BITS, LP_MAX_N
from .simplex import RationalSimplex

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def transform_matrix(n: int) -> Tuple[Tuple[int, ...], ...]:
    """c[i][j] = coefficient of y^i in (1 + 3y)^(n-j) (1 - y)^j.

    Setting x = 1 in K A((x+3y)/2, (x-y)/2) gives B_i = K/2^n sum_j c[i][j] A_j,
    and (y-x)/2 in place of (x-y)/2 gives S_i = K/2^n sum_j (-1)^j c[i][j] A_j.
    """
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        plus = [comb(n - j, a) * 3 ** a for a in range(n - j + 1)]
        minus = [comb(j, b) * (-1) ** b for b in range(j + 1)]
        for a, p in enumerate(plus):
            for b, q in enumerate(minus):
                rows[a + b][j] += p * q
    return tuple(tuple(r) for r in rows)


def enumerator_transform(n: int, K: Rational, A: List[Rational]) -> Tuple[List[Fraction], List[Fraction]]:
    """(B, S) coefficients of a weight distribution A_0..A_n."""
    c = transform_matrix(n)
    scale = Fraction(K) / (1 << n)
    B = [scale * sum(c[i][j] * A[j] for j in range(n + 1)) for i in range(n + 1)]
    S = [scale * sum((-1) ** j * c[i][j] * A[j] for j in range(n + 1)) for i in range(n + 1)]
    return B, S


@dataclass(frozen=True)
class LpInstance:
    """Feasibility problem for one (n, d, K); A_0 = 1 is fixed."""

    n: int
    d: int
    K: Fraction
    pure: bool = False

    def __post_init__(self):
        if not 1 <= self.n <= LP_MAX_N:
            raise ValueError(f"n must be in 1..{LP_MAX_N}, got {self.n}")
        if self.d < 1:
            raise ValueError("d must be at least 1")
        if self.K <= 0:
            raise ValueError("K must be positive")

    def free_weights(self) -> List[int]:
        """Weights j >= 1 whose A_j is a variable; pure instances pin A_j = 0 below d."""
        start = self.d if self.pure else 1
        return list(range(start, self.n + 1))

    def build(self) -> RationalSimplex:
        n = self.n
        c = transform_matrix(n)
        weights = self.free_weights()
        ratio = Fraction(1 << n) / Fraction(self.K)  # rows are scaled by 2^n / K
        lp = RationalSimplex(len(weights))
        for i in range(n + 1):
            # B_i - A_i, scaled: sum_j c[i][j] A_j - ratio * A_i
            coeffs = [c[i][j] - (ratio if i == j else 0) for j in weights]
            rhs = (ratio if i == 0 else 0) - c[i][0]
            lp.add_constraint(coeffs, "==" if i < self.d else ">=", rhs)
            lp.add_constraint([(-1) ** j * c[i][j] for j in weights], ">=", -c[i][0])
        return lp

    def solve(self) -> Optional[List[Fraction]]:
        """A_0..A_n satisfying every constraint, or None."""
        lp = self.build()
        if not lp.feasible():
            return None
        A = [Fraction(0)] * (self.n + 1)
        A[0] = Fraction(1)
        for j, value in zip(self.free_weights(), lp.solution):
            A[j] = value
        return A


def lp_feasible(n: int, d: int, K: Rational, pure: bool = False) -> bool:
    return LpInstance(n, d, Fraction(K), pure).solve() is not None


def singleton_bound(n: int, d: int) -> int:
    if d < 1:
        raise ValueError("d must be at least 1")
    exponent = n - 2 * (d - 1)
    return 1 << exponent if exponent >= 0 else 0


@dataclass(frozen=True)
class LpBound:
    n: int
    d: int
    pure: bool
    integer: int  # largest feasible integer K (0 if none)
    real: Fraction  # largest feasible K found by bisection, within 2^-bits

    def to_dict(self):
        return {"n": self.n, "d": self.d, "pure": self.pure, "lp_K": self.integer, "lp_K_real": float(self.real)}


def lp_max_K(n: int, d: int, pure: bool = False, bits: int = LP_BISECTION_BITS) -> LpBound:
    """Largest integer K passing the LP test, refined to a rational supremum.

    Feasibility is downward closed in K, so both searches are bisections.
    K above 2^n is never feasible since the weights must sum to 2^n / K.
    """
    cap = 1 << n
    if not lp_feasible(n, d, 1, pure):
        return LpBound(n, d, pure, integer=0, real=Fraction(0))

    lo = 1
    hi = min(max(singleton_bound(n, d), 1) + 1, cap + 1)
    if lp_feasible(n, d, hi, pure):
        hi = cap + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if lp_feasible(n, d, mid, pure):
            lo = mid
        else:
            hi = mid
    integer = lo

    low, high = Fraction(lo), Fraction(lo + 1)
    for _ in range(bits):
        mid = (low + high) / 2
        if lp_feasible(n, d, mid, pure):
            low = mid
        else:
            high = mid
    logger.debug(f"LP bound n={n} d={d} pure={pure}: K <= {integer} (real ~ {float(low):.6f})")
    return LpBound(n, d, pure, integer=integer, real=low)


def lp_bound_table(n_values: Iterable[int], d_values: Iterable[int], pure: bool = False,
                   bits: int = LP_BISECTION_BITS) -> List[LpBound]:
    """LP bounds for every (n, d) with 2(d-1) <= n."""
    rows = []
    d_values = list(d_values)
    for n in n_values:
        for d in d_values:
            if singleton_bound(n, d) == 0:
                continue
            rows.append(lp_max_K(n, d, pure, bits))
    return rows
