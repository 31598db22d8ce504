from .code import (
    ClassicalErrorData,
    CliqueInstance,
    CodeFile,
    CwsCode,
    StandardForm,
    Verdict,
    Violation,
    format_word,
    parse_word,
)
from .graph import Bisection, CanonicalForm, Graph, GraphClass, edge_pairs
from .pauli import ErrorSet, ErrorSetKind, PauliOp
from .search import (
    CROSSOVER_KINDS,
    MUTATION_KINDS,
    Clique,
    GaConfig,
    GaOutcome,
    GraphResult,
    PlsParams,
    SearchReport,
    SolveResult,
)

__all__ = [
    "Bisection",
    "CanonicalForm",
    "ClassicalErrorData",
    "Clique",
    "CliqueInstance",
    "CodeFile",
    "CROSSOVER_KINDS",
    "CwsCode",
    "ErrorSet",
    "ErrorSetKind",
    "GaConfig",
    "GaOutcome",
    "Graph",
    "GraphClass",
    "GraphResult",
    "MUTATION_KINDS",
    "PauliOp",
    "PlsParams",
    "SearchReport",
    "SolveResult",
    "StandardForm",
    "Verdict",
    "Violation",
    "edge_pairs",
    "format_word",
    "parse_word",
]
