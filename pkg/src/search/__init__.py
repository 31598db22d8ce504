from .campaign import (
    MODES,
    RELATION_NAMES,
    Candidate,
    SearchCampaign,
    fan_out,
    order_histogram,
    solve_graph,
)
from .compare import compare_crossovers, elitism_monotone, one_sided_pvalues

__all__ = [
    "Candidate",
    "MODES",
    "RELATION_NAMES",
    "SearchCampaign",
    "compare_crossovers",
    "elitism_monotone",
    "fan_out",
    "one_sided_pvalues",
    "order_histogram",
    "solve_graph",
]
