"""Shipped reference bounds and cross-checks against computed LP bounds."""

import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..config import REFERENCE_BOUNDS_FILE
from .lp import LpBound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReferenceBound:
    table: str  # stabilizer_k, nonadditive_K, ad1_stabilizer_K or ad1_cws_K
    n: int
    d: Optional[int]
    lower: int
    upper: Optional[int]
    mark: str
    provenance: str


def _optional_int(text: str) -> Optional[int]:
    text = text.strip()
    return int(text) if text else None


def load_reference(path: Union[str, Path] = REFERENCE_BOUNDS_FILE) -> List[ReferenceBound]:
    rows = []
    with open(path, newline="") as f:
        for record in csv.DictReader(f):
            rows.append(ReferenceBound(
                table=record["table"],
                n=int(record["n"]),
                d=_optional_int(record["d"]),
                lower=int(record["lower"]),
                upper=_optional_int(record["upper"]),
                mark=record["mark"].strip(),
                provenance=record["provenance"],
            ))
    logger.debug(f"Loaded {len(rows)} reference bounds from {path}")
    return rows


def reference_index(rows: Iterable[ReferenceBound]) -> Dict[Tuple[str, int, Optional[int]], ReferenceBound]:
    return {(r.table, r.n, r.d): r for r in rows}


def lp_mismatches(bounds: Iterable[LpBound], rows: Iterable[ReferenceBound]) -> List[str]:
    """Disagreements between computed LP bounds and the reference upper bounds.

    The nonadditive table's upper bounds are LP values. Unmarked stabilizer
    upper bounds are the largest k with 2^k passing the LP test; marked
    entries rest on further exclusion arguments and are skipped.
    """
    index = reference_index(rows)
    problems = []
    for b in bounds:
        if b.pure:
            continue
        ref = index.get(("nonadditive_K", b.n, b.d))
        if ref is not None and ref.upper is not None and ref.upper != b.integer:
            problems.append(f"(n={b.n}, d={b.d}): LP gives K <= {b.integer}, reference says {ref.upper}")
        ref = index.get(("stabilizer_k", b.n, b.d))
        if ref is not None and ref.upper is not None and not ref.mark and b.integer >= 1:
            k = b.integer.bit_length() - 1
            if k != ref.upper:
                problems.append(f"(n={b.n}, d={b.d}): LP gives k <= {k}, reference says {ref.upper}")
    for message in problems:
        logger.warning(f"Reference mismatch {message}")
    return problems
