from .detection import (
    DetectionResult,
    basis_orthonormality_check,
    detection_check,
    stabilizer_check,
    xz_rule_check,
)
from .statevector import StateVector, apply_pauli, apply_z_word, graph_state, inner

__all__ = [
    "DetectionResult",
    "StateVector",
    "apply_pauli",
    "apply_z_word",
    "basis_orthonormality_check",
    "detection_check",
    "graph_state",
    "inner",
    "stabilizer_check",
    "xz_rule_check",
]
