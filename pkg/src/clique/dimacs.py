"""DIMACS ascii clique instances."""

import logging
from pathlib import Path
from typing import Union

import numpy as np

from .common import ExplicitProblem

logger = logging.getLogger(__name__)


class DimacsParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_dimacs(text: str) -> ExplicitProblem:
    """Read ``p edge``/``p col`` headers and ``e i j`` lines; labels are 1-based."""
    num_nodes = None
    matrix = None
    declared_edges = 0
    seen = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        if fields[0] == "p":
            if num_nodes is not None:
                raise DimacsParseError("duplicate problem line", number)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise DimacsParseError(f"bad problem line {raw!r}", number)
            try:
                num_nodes, declared_edges = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsParseError(f"bad problem line {raw!r}", number) from None
            matrix = np.zeros((num_nodes, num_nodes), dtype=bool)
        elif fields[0] == "e":
            if matrix is None:
                raise DimacsParseError("edge before problem line", number)
            try:
                i, j = int(fields[1]), int(fields[2])
            except (IndexError, ValueError):
                raise DimacsParseError(f"bad edge line {raw!r}", number) from None
            if not (1 <= i <= num_nodes and 1 <= j <= num_nodes):
                raise DimacsParseError(f"edge ({i}, {j}) outside 1..{num_nodes}", number)
            if i != j:
                matrix[i - 1, j - 1] = matrix[j - 1, i - 1] = True
            seen += 1
        else:
            raise DimacsParseError(f"unknown line type {fields[0]!r}", number)
    if matrix is None:
        raise DimacsParseError("missing problem line", 1)
    if seen != declared_edges:
        logger.warning(f"DIMACS header declares {declared_edges} edges, found {seen}")
    return ExplicitProblem(np.arange(1, num_nodes + 1, dtype=np.int64), matrix)


def read_dimacs(path: Union[str, Path]) -> ExplicitProblem:
    return parse_dimacs(Path(path).read_text())
