"""Text formats for codes and clique instances."""

import logging
import re
from pathlib import Path
from typing import Optional, Tuple, Union

from ..bitgraph import Graph6ParseError, from_graph6, to_graph6
from ..clique.common import as_problem
from ..models import CliqueInstance, CodeFile, CwsCode, ErrorSet, Graph, format_word, parse_word
from ..pauli import parse_error_set_spec

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r"^n=(\d+) graph6=(\S+) errorset=(\S+) K=(\d+)$")
HASH_RE = re.compile(r"^[0-9a-f]{64}$")


class CodeFileError(ValueError):
    """Malformed code file."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_code_file(code: CwsCode, error_set: ErrorSet) -> str:
    if code.error_set_hash != error_set.content_hash:
        raise ValueError("Code was built against a different error set")
    n = code.graph.n
    lines = [f"n={n} graph6={to_graph6(code.graph)} errorset={error_set.descriptor} K={code.K}"]
    lines.extend(format_word(x, n) for x in code.codewords)
    return "\n".join(lines) + "\n"


def write_code_file(path: Union[str, Path], code: CwsCode, error_set: ErrorSet) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_code_file(code, error_set))
    logger.info(f"Wrote code file: {path}")
    return path


def parse_code_file(text: str) -> CodeFile:
    lines = [line.strip() for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise CodeFileError("empty file", 1)

    match = HEADER_RE.match(lines[0])
    if not match:
        raise CodeFileError(f"bad header {lines[0]!r}", 1)
    n, graph6, errorset, K = int(match[1]), match[2], match[3], int(match[4])

    words = []
    for number, line in enumerate(lines[1:], start=2):
        if len(line) != n:
            raise CodeFileError(f"codeword {line!r} is not {n} bits long", number)
        try:
            words.append(parse_word(line))
        except ValueError as exc:
            raise CodeFileError(str(exc), number) from exc
    if len(words) != K:
        raise CodeFileError(f"header says K={K} but {len(words)} codewords follow", len(lines))
    if not words or words[0] != 0:
        raise CodeFileError("the first codeword must be the zero word", 2)
    if len(set(words)) != len(words):
        raise CodeFileError("duplicate codewords", len(lines))
    return CodeFile(n=n, graph6=graph6, errorset=errorset, K=K, codewords=tuple(words))


def read_code_file(path: Union[str, Path]) -> CodeFile:
    return parse_code_file(Path(path).read_text())


def load_code(
    record: CodeFile,
    error_set: Optional[ErrorSet] = None,
) -> Tuple[Graph, ErrorSet, Tuple[int, ...]]:
    """Resolve a parsed code file into (graph, error set, codewords).

    The errorset field is either a descriptor, rebuilt here, or a content
    hash, which must match the error set supplied by the caller.
    """
    try:
        graph = from_graph6(record.graph6)
    except Graph6ParseError as exc:
        raise CodeFileError(f"bad graph6 string: {exc}", 1) from exc
    if graph.n != record.n:
        raise CodeFileError(f"graph6 encodes {graph.n} nodes, header says n={record.n}", 1)

    if HASH_RE.match(record.errorset):
        if error_set is None:
            raise CodeFileError("errorset is a hash; an explicit error set is required", 1)
        if error_set.content_hash != record.errorset:
            raise CodeFileError("errorset hash does not match the supplied error set", 1)
    else:
        try:
            from_file = parse_error_set_spec(record.errorset, record.n)
        except ValueError as exc:
            raise CodeFileError(f"bad errorset descriptor: {exc}", 1) from exc
        if error_set is not None and error_set.content_hash != from_file.content_hash:
            logger.warning(
                f"Code file declares {record.errorset}; checking against {error_set.descriptor} instead"
            )
        else:
            error_set = from_file
    if error_set.n != record.n:
        raise CodeFileError(f"error set acts on {error_set.n} qubits, header says n={record.n}", 1)
    return graph, error_set, record.codewords


def format_dimacs(inst: CliqueInstance) -> str:
    """DIMACS ascii graph; node k+1 is inst.nodes[k]."""
    problem = as_problem(inst)
    edges = list(problem.edges())
    lines = [f"c CWS clique instance n={inst.n}", f"p edge {len(problem)} {len(edges)}"]
    lines.extend(f"e {i + 1} {j + 1}" for i, j in edges)
    return "\n".join(lines) + "\n"
