"""Shortest-path edge-removal split of a graph into two fragments."""

import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..models import Graph
from ..rng import RngLike, as_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fragment:
    """Induced subgraph plus the original label of each of its nodes."""

    graph: Graph
    nodes: Tuple[int, ...]


def shortest_path(rows: List[int], source: int, target: int) -> Optional[List[int]]:
    """BFS path; neighbors are explored in ascending order."""
    parent = {source: source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == target:
            path = [v]
            while v != source:
                v = parent[v]
                path.append(v)
            return path[::-1]
        rest = rows[v]
        while rest:
            w = (rest & -rest).bit_length() - 1
            if w not in parent:
                parent[w] = v
                queue.append(w)
            rest &= rest - 1
    return None


def globus_split(
    g: Graph,
    rng: RngLike = None,
    edge: Optional[Tuple[int, int]] = None,
) -> Tuple[Fragment, Fragment]:
    """Cut random shortest-path edges until the chosen endpoints separate.

    ``edge`` fixes the initial edge; by default it is drawn uniformly.
    """
    edges = g.edges()
    if not edges:
        raise ValueError("Cannot split a graph without edges")
    rng = as_rng(rng)
    if edge is None:
        edge = edges[int(rng.integers(len(edges)))]
    elif not g.has_edge(*edge):
        raise ValueError(f"{edge} is not an edge of the graph")
    source, target = edge

    rows = list(g.adj)
    removed = 0
    while True:
        path = shortest_path(rows, source, target)
        if path is None:
            break
        k = int(rng.integers(len(path) - 1))
        a, b = path[k], path[k + 1]
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        removed += 1

    cut = Graph(g.n, tuple(rows))
    first = next(c for c in cut.components() if source in c)
    rest = [v for v in range(g.n) if v not in first]
    logger.debug(f"Split after removing {removed} edges: {len(first)} + {len(rest)} nodes")
    return (
        Fragment(cut.induced(first), tuple(first)),
        Fragment(cut.induced(rest), tuple(rest)),
    )
