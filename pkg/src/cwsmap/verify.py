"""Standard-form detection check, code construction and export."""

import logging
from typing import Iterable, Optional, Tuple

import numpy as np

from ..models import Clique, CwsCode, ErrorSet, Graph, StandardForm, Verdict, Violation
from .mapping import cl_values, parity

logger = logging.getLogger(__name__)


def _normalize_words(n: int, codewords: Iterable[int]) -> Tuple[int, ...]:
    words = [int(x) for x in codewords]
    if len(set(words)) != len(words):
        raise ValueError("Codewords must be distinct")
    if 0 not in words:
        raise ValueError("Standard-form codes must contain the zero codeword")
    bad = [x for x in words if not 0 <= x < (1 << n)]
    if bad:
        raise ValueError(f"Codeword {bad[0]} does not fit in {n} bits")
    return tuple(sorted(words))


def verify_code(g: Graph, e: ErrorSet, codewords: Iterable[int]) -> Verdict:
    """Check that the code spanned by ``codewords`` on ``g`` detects every error in ``e``.

    Errors are scanned in error-set order. An error with a nonzero image must
    not carry one codeword onto another; an error with a zero image must
    commute with every word operator. The first failure is reported.
    """
    words = np.asarray(_normalize_words(e.n, codewords), dtype=np.int64)
    cl = cl_values(g, e)
    u = e.u_array

    pure = True
    violation: Optional[Violation] = None
    for k, op in enumerate(e.ops):
        image = int(cl[k])
        if image:
            if violation is None:
                hits = np.flatnonzero(np.isin(words ^ image, words))
                if hits.size:
                    x_i = int(words[hits[0]])
                    violation = Violation(op.to_string(), x_i, x_i ^ image, condition=1)
            continue
        if not u[k]:
            continue
        pure = False
        if violation is None:
            odd = np.flatnonzero(parity(words & u[k]))
            if odd.size:
                x_i = int(words[odd[0]])
                violation = Violation(op.to_string(), x_i, x_i, condition=3)

    if violation is not None:
        logger.debug(f"Verification failed: {violation.describe(e.n)}")
    return Verdict(ok=violation is None, pure=pure, violation=violation)


def build_code(g: Graph, e: ErrorSet, clique: Clique) -> CwsCode:
    """Turn a clique of nonzero words into a verified standard-form code."""
    words = _normalize_words(e.n, set(clique.members) | {0})
    verdict = verify_code(g, e, words)
    if not verdict.ok:
        raise ValueError(f"Clique does not give a valid code: {verdict.violation.describe(e.n)}")
    return CwsCode(graph=g, codewords=words, error_set_hash=e.content_hash, pure=verdict.pure)


def export_standard_form(g: Graph, codewords: Iterable[int]) -> StandardForm:
    words = _normalize_words(g.n, codewords)
    generators = []
    for i in range(g.n):
        letters = ["Z" if g.has_edge(i, k) else "I" for k in range(g.n)]
        letters[i] = "X"
        generators.append("".join(letters))
    word_operators = tuple("".join("Z" if (x >> k) & 1 else "I" for k in range(g.n)) for x in words)
    return StandardForm(generators=tuple(generators), word_operators=word_operators)
