"""Exact statevectors with Gaussian-integer amplitudes.

The true amplitude of basis state x is (re[x] + i im[x]) / 2^(n/2); bit k
of x is qubit k.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from ..config import ORACLE_MAX_QUBITS
from ..models import Graph, PauliOp


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    re: np.ndarray
    im: np.ndarray

    def __post_init__(self):
        if self.n > ORACLE_MAX_QUBITS:
            raise ValueError(f"The oracle is limited to {ORACLE_MAX_QUBITS} qubits, got {self.n}")
        if self.re.shape != (1 << self.n,) or self.im.shape != (1 << self.n,):
            raise ValueError("Amplitude arrays must have length 2^n")

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im)

    def norm_squared(self) -> int:
        """Sum of |amp|^2 in integer units; 2^n for a normalized state."""
        return int(np.dot(self.re, self.re) + np.dot(self.im, self.im))

    def amplitudes(self) -> np.ndarray:
        return self.re + 1j * self.im


def _basis(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def _parity(values: np.ndarray) -> np.ndarray:
    x = values.copy()
    for shift in (16, 8, 4, 2, 1):
        x ^= x >> shift
    return x & 1


def graph_state(g: Graph) -> StateVector:
    """amps[x] = (-1)^(number of edges inside the support of x)."""
    xs = _basis(g.n)
    edges_inside = np.zeros_like(xs)
    for i, j in g.edges():
        edges_inside ^= ((xs >> i) & 1) & ((xs >> j) & 1)
    re = 1 - 2 * edges_inside
    return StateVector(g.n, re.astype(np.int64), np.zeros_like(re, dtype=np.int64))


def _rotate(re: np.ndarray, im: np.ndarray, power: int) -> Tuple[np.ndarray, np.ndarray]:
    """Multiply by i^power."""
    power %= 4
    if power == 0:
        return re, im
    if power == 1:
        return -im, re
    if power == 2:
        return -re, -im
    return im, -re


def apply_pauli(s: StateVector, p: Union[PauliOp, str], phase: int = 0) -> StateVector:
    """Apply i^phase times the letter operator, where Y = iXZ on each qubit."""
    if isinstance(p, str):
        p = PauliOp.from_string(p)
    if p.n != s.n:
        raise ValueError(f"Operator acts on {p.n} qubits, state has {s.n}")
    xs = _basis(s.n)
    sign = 1 - 2 * _parity(xs & p.v)  # Z^v
    re = s.re * sign
    im = s.im * sign
    source = xs ^ p.u  # X^u: new[x] = old[x ^ u]
    re, im = re[source], im[source]
    re, im = _rotate(re, im, (p.u & p.v).bit_count() + phase)
    return StateVector(s.n, re, im)


def apply_z_word(s: StateVector, x: int) -> StateVector:
    """W_x = Z^x."""
    return apply_pauli(s, PauliOp(s.n, 0, x))


def inner(a: StateVector, b: StateVector) -> Tuple[int, int]:
    """<a|b> in units of 2^n, as (real, imaginary) integers."""
    if a.n != b.n:
        raise ValueError("States have different qubit counts")
    real = int(np.dot(a.re, b.re) + np.dot(a.im, b.im))
    imag = int(np.dot(a.re, b.im) - np.dot(a.im, b.re))
    return real, imag
