"""Canonical labeling, automorphism counts and class enumeration.

Isomorphism is decided by brute force: the canonical form is the smallest
upper-triangle code over all n! relabelings. This is O(n!) and gated to
small n; enumeration sweeps every labeled graph and is gated tighter still.
"""

import logging
from collections import deque
from functools import lru_cache
from itertools import islice, permutations
from math import comb, factorial
from typing import Dict, Iterator, List, Set, Tuple

import numpy as np

from ..config import CANONICAL_MAX_NODES, ENUMERATION_MAX_NODES, LC_ORBIT_MAX_NODES
from ..models import CanonicalForm, Graph, GraphClass, edge_pairs
from .operations import local_complement

logger = logging.getLogger(__name__)

RELATIONS = ("isomorphism", "lc_isomorphism")
_PERMUTATION_CHUNK = 40320


class EnumerationTooLargeError(ValueError):
    def __init__(self, n: int, limit: int):
        labeled = 2 ** comb(n, 2)
        super().__init__(
            f"Enumerating n={n} sweeps {labeled:,} labeled graphs with up to "
            f"{factorial(n):,} relabelings per class; limit is n={limit}"
        )
        self.n = n
        self.labeled = labeled


@lru_cache(maxsize=None)
def _pair_index(n: int) -> np.ndarray:
    index = np.zeros((n, n), dtype=np.int64)
    for k, (i, j) in enumerate(edge_pairs(n)):
        index[i, j] = index[j, i] = k
    return index


def _image_weights(n: int, perms: np.ndarray) -> np.ndarray:
    """weights[p, k]: code bit contributed by pair k under relabeling p."""
    pairs = np.array(edge_pairs(n), dtype=np.int64).reshape(-1, 2)
    m = len(pairs)
    images = _pair_index(n)[perms[:, pairs[:, 0]], perms[:, pairs[:, 1]]]
    return np.left_shift(np.int64(1), (m - 1 - images).astype(np.int64))


def _permutation_chunks(n: int) -> Iterator[np.ndarray]:
    source = permutations(range(n))
    while True:
        chunk = list(islice(source, _PERMUTATION_CHUNK))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64)


@lru_cache(maxsize=None)
def _all_image_weights(n: int) -> np.ndarray:
    return _image_weights(n, np.array(list(permutations(range(n))), dtype=np.int64))


def _code_bits(n: int, code: int) -> np.ndarray:
    m = comb(n, 2)
    return np.array([(code >> (m - 1 - k)) & 1 for k in range(m)], dtype=np.int64)


def canonical_form(g: Graph, max_nodes: int = CANONICAL_MAX_NODES) -> CanonicalForm:
    if g.n > max_nodes:
        raise ValueError(f"Brute-force canonical form is limited to n <= {max_nodes}")
    code = g.to_code()
    if g.n == 1:
        return CanonicalForm(canon_bits=0, aut_size=1, n=1)

    bits = _code_bits(g.n, code)
    degrees = np.array(g.degrees())
    best = None
    automorphisms = 0
    for perms in _permutation_chunks(g.n):
        images = _image_weights(g.n, perms) @ bits
        low = int(images.min())
        best = low if best is None else min(best, low)
        # only degree-preserving relabelings can fix the graph
        preserving = (degrees[perms] == degrees[None, :]).all(axis=1)
        automorphisms += int(np.count_nonzero(images[preserving] == code))
    return CanonicalForm(canon_bits=best, aut_size=automorphisms, n=g.n)


def orbit_size(g: Graph) -> int:
    """Number of labeled graphs isomorphic to ``g``."""
    return factorial(g.n) // canonical_form(g).aut_size


def lc_orbit(g: Graph, max_nodes: int = LC_ORBIT_MAX_NODES) -> Set[Graph]:
    """Closure of ``g`` under local complementation at every node."""
    if g.n > max_nodes:
        raise ValueError(f"LC orbit storage is limited to n <= {max_nodes}")
    orbit = {g}
    queue = deque([g])
    while queue:
        current = queue.popleft()
        for v in range(current.n):
            nxt = local_complement(current, v)
            if nxt not in orbit:
                orbit.add(nxt)
                queue.append(nxt)
    return orbit


@lru_cache(maxsize=None)
def _isomorphism_table(n: int) -> Tuple[np.ndarray, Tuple[int, ...], Tuple[int, ...]]:
    """Class id of every labeled graph, plus per-class minimal code and size.

    Classes are numbered in order of their minimal code, which is also the
    canonical code of every member.
    """
    m = comb(n, 2)
    class_id = np.full(1 << m, -1, dtype=np.int32)
    weights = _all_image_weights(n) if m else np.zeros((1, 0), dtype=np.int64)
    reps: List[int] = []
    sizes: List[int] = []
    pos = 0
    total = 1 << m
    while pos < total:
        offset = int(np.argmax(class_id[pos:] < 0))
        if class_id[pos + offset] >= 0:
            break
        code = pos + offset
        images = np.unique(weights @ _code_bits(n, code)) if m else np.array([0])
        class_id[images] = len(reps)
        reps.append(code)
        sizes.append(int(images.size))
        pos = code + 1
    logger.debug(f"n={n}: {len(reps)} isomorphism classes over {total} labeled graphs")
    return class_id, tuple(reps), tuple(sizes)


def enumerate_classes(
    n: int,
    relation: str = "lc_isomorphism",
    max_nodes: int = ENUMERATION_MAX_NODES,
) -> List[GraphClass]:
    """Partition all labeled n-node graphs by isomorphism or LC-isomorphism."""
    if relation not in RELATIONS:
        raise ValueError(f"Unknown relation {relation!r}, expected one of {RELATIONS}")
    if n > max_nodes:
        raise EnumerationTooLargeError(n, max_nodes)

    class_id, reps, sizes = _isomorphism_table(n)
    fact = factorial(n)

    if relation == "isomorphism":
        return [
            GraphClass(Graph.from_code(n, code), size, fact // size, 1)
            for code, size in zip(reps, sizes)
        ]

    parent = list(range(len(reps)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # LC commutes with relabeling, so joining class representatives suffices
    for cid, code in enumerate(reps):
        g = Graph.from_code(n, code)
        for v in range(n):
            other = int(class_id[local_complement(g, v).to_code()])
            a, b = find(cid), find(other)
            if a != b:
                parent[max(a, b)] = min(a, b)

    groups: Dict[int, List[int]] = {}
    for cid in range(len(reps)):
        groups.setdefault(find(cid), []).append(cid)

    classes = []
    for root in sorted(groups):
        members = groups[root]
        classes.append(GraphClass(
            representative=Graph.from_code(n, reps[root]),
            class_size=sum(sizes[c] for c in members),
            aut_size=fact // sizes[root],
            iso_classes=len(members),
        ))
    logger.info(f"n={n}: {len(reps)} isomorphism classes in {len(classes)} LC classes")
    return classes


def iso_class_members(n: int, representative: Graph) -> List[Graph]:
    """Isomorphism-class representatives LC-isomorphic to ``representative``."""
    class_id, reps, _ = _isomorphism_table(n)
    seen = {int(class_id[g.to_code()]) for g in lc_orbit(representative)}
    return [Graph.from_code(n, reps[c]) for c in sorted(seen)]
