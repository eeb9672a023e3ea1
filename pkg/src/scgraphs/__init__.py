"""Singularly cospectral graphs: exact classification, constructions and search."""

from .classify import (
    PairReport,
    TheoremViolation,
    check_regular_pair,
    check_sc_implies_ac,
    classify_pair,
    is_almost_cospectral,
    is_cospectral,
    is_equienergetic,
    is_singularly_cospectral,
)
from .constructions import (
    ConstructionSpec,
    add_vertex,
    cartesian_product,
    coalesce,
    coalesce_chain,
    delete_vertex,
    disjoint_union,
    double,
    family_gknj,
    family_hknj,
    rowlinson_charpoly,
    strong_product,
    tensor_k2,
    tensor_product,
)
from .graph import (
    Graph,
    Graph6Error,
    degree_sequence,
    is_bipartite,
    is_connected,
    is_regular,
    parse_graph6,
    write_graph6,
)
from .poly import (
    IntPolynomial,
    Inertia,
    char_poly,
    inertia,
    rank_nullity,
    squared_char_poly,
    strip_zero_roots,
    trace_power,
)
from .spectrum import SpectrumNumeric, eigenvalues, energy, schatten, singular_values, spectral_radius
from .walks import WalkProfile, cycle_pair, walk_equivalent, walk_profile

__version__ = "0.1.0"

__all__ = [
    "ConstructionSpec",
    "Graph",
    "Graph6Error",
    "Inertia",
    "IntPolynomial",
    "PairReport",
    "SpectrumNumeric",
    "TheoremViolation",
    "WalkProfile",
    "add_vertex",
    "cartesian_product",
    "char_poly",
    "check_regular_pair",
    "check_sc_implies_ac",
    "classify_pair",
    "coalesce",
    "coalesce_chain",
    "cycle_pair",
    "degree_sequence",
    "delete_vertex",
    "disjoint_union",
    "double",
    "eigenvalues",
    "energy",
    "family_gknj",
    "family_hknj",
    "inertia",
    "is_almost_cospectral",
    "is_bipartite",
    "is_connected",
    "is_cospectral",
    "is_equienergetic",
    "is_regular",
    "is_singularly_cospectral",
    "parse_graph6",
    "rank_nullity",
    "rowlinson_charpoly",
    "schatten",
    "singular_values",
    "spectral_radius",
    "squared_char_poly",
    "strip_zero_roots",
    "strong_product",
    "tensor_k2",
    "tensor_product",
    "trace_power",
    "walk_equivalent",
    "walk_profile",
    "write_graph6",
]
