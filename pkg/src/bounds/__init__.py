from .families import FAMILIES, known_family_size, odd_n_d2_bound, rains_size, smolin_size
from .lp import (
    LpBound,
    LpInstance,
    enumerator_transform,
    lp_bound_table,
    lp_feasible,
    lp_max_K,
    singleton_bound,
    transform_matrix,
)
from .reference import ReferenceBound, load_reference, lp_mismatches, reference_index
from .simplex import RationalSimplex

__all__ = [
    "FAMILIES",
    "LpBound",
    "LpInstance",
    "RationalSimplex",
    "ReferenceBound",
    "enumerator_transform",
    "known_family_size",
    "load_reference",
    "lp_bound_table",
    "lp_feasible",
    "lp_max_K",
    "lp_mismatches",
    "odd_n_d2_bound",
    "rains_size",
    "reference_index",
    "singleton_bound",
    "smolin_size",
    "transform_matrix",
]
