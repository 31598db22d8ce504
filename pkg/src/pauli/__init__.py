from .error_sets import (
    amp_damp_error_set,
    apply_qubit_permutations,
    parse_error_set_spec,
    symmetric_error_set,
    weight_k_ops,
)
from .operators import NAMED_PERMUTATIONS, commutes, permute_letters, product, weight

__all__ = [
    "NAMED_PERMUTATIONS",
    "amp_damp_error_set",
    "apply_qubit_permutations",
    "commutes",
    "parse_error_set_spec",
    "permute_letters",
    "product",
    "symmetric_error_set",
    "weight",
    "weight_k_ops",
]
