from .canonical import (
    EnumerationTooLargeError,
    canonical_form,
    enumerate_classes,
    iso_class_members,
    lc_orbit,
    orbit_size,
)
from .graph6 import Graph6ParseError, from_graph6, to_graph6
from .operations import brute_force_min_bisection, cut_size, local_complement, random_graph
from .spectral import fiedler_pair, fiedler_vector, jacobi_eigh, laplacian, spectral_bisection
from .splitting import Fragment, globus_split

__all__ = [
    "EnumerationTooLargeError",
    "Fragment",
    "Graph6ParseError",
    "brute_force_min_bisection",
    "canonical_form",
    "cut_size",
    "enumerate_classes",
    "fiedler_pair",
    "fiedler_vector",
    "from_graph6",
    "globus_split",
    "iso_class_members",
    "jacobi_eigh",
    "laplacian",
    "lc_orbit",
    "local_complement",
    "orbit_size",
    "random_graph",
    "spectral_bisection",
    "to_graph6",
]
