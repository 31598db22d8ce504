"""Laplacian spectrum, Fiedler vector and spectral bisection.

The eigen-decomposition is a cyclic Jacobi sweep on the dense Laplacian so
that results are bit-for-bit reproducible; n <= 16 keeps it cheap.
"""

import logging
from typing import Tuple

import numpy as np

from ..config import FIEDLER_SIGN_TOLERANCE, JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE
from ..models import Bisection, Graph
from .operations import cut_size

logger = logging.getLogger(__name__)


def laplacian(g: Graph) -> np.ndarray:
    """L = D - adjacency, as an int64 matrix."""
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for i, j in g.edges():
        lap[i, j] = lap[j, i] = -1
    lap[np.diag_indices(g.n)] = g.degrees()
    return lap


def jacobi_eigh(matrix: np.ndarray, tol: float = JACOBI_TOLERANCE) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending, stable order) and column eigenvectors of a symmetric matrix."""
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    vectors = np.eye(n)

    for sweep in range(JACOBI_MAX_SWEEPS):
        off = np.abs(np.triu(a, 1)).max() if n > 1 else 0.0
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < tol:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vec_p, vec_q = vectors[:, p].copy(), vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s * vec_q
                vectors[:, q] = s * vec_p + c * vec_q
    else:
        logger.warning(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]


def fiedler_pair(g: Graph) -> Tuple[float, np.ndarray]:
    """Second-smallest Laplacian eigenvalue and its unit eigenvector.

    Sign is fixed so the first component above tolerance is positive.
    """
    if g.n < 2:
        raise ValueError("The Fiedler vector needs at least two nodes")
    values, vectors = jacobi_eigh(laplacian(g))
    u = vectors[:, 1] / np.linalg.norm(vectors[:, 1])
    for component in u:
        if abs(component) > FIEDLER_SIGN_TOLERANCE:
            if component < 0:
                u = -u
            break
    return float(values[1]), u


def fiedler_vector(g: Graph) -> np.ndarray:
    return fiedler_pair(g)[1]


def spectral_bisection(g: Graph) -> Bisection:
    """Put the floor(n/2) smallest Fiedler components in part1.

    Equal components are ordered by node index.
    """
    u = fiedler_vector(g)
    order = sorted(range(g.n), key=lambda i: (u[i], i))
    half = g.n // 2
    part1 = tuple(sorted(order[:half]))
    part2 = tuple(sorted(order[half:]))
    return Bisection(part1=part1, part2=part2, cut_size=cut_size(g, part1))
