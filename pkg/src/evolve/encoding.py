"""Bitstring genome of a graph: the upper triangle read row by row."""

import numpy as np

from ..models import Graph, edge_pairs


def encode_bits(g: Graph) -> np.ndarray:
    """uint8 array over pairs (0,1), (0,2), ..., (n-2,n-1)."""
    return np.fromiter((g.has_edge(i, j) for i, j in edge_pairs(g.n)), dtype=np.uint8, count=len(edge_pairs(g.n)))


def decode_bits(bits, n: int) -> Graph:
    bits = np.asarray(bits)
    pairs = edge_pairs(n)
    if bits.shape != (len(pairs),):
        raise ValueError(f"Expected {len(pairs)} bits for n={n}, got shape {bits.shape}")
    return Graph.from_edges(n, [pairs[k] for k in np.flatnonzero(bits)])


def bits_to_str(bits) -> str:
    return "".join("1" if b else "0" for b in bits)
