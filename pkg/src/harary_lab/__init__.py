"""Exact Harary polynomials, edge-elimination invariants and connection-matrix ranks."""

from .config import BoundExceeded
from .graphs import (
    MultiGraph,
    build_named,
    canonical_form,
    enumerate_nonisomorphic,
    from_graph6,
    is_isomorphic,
    parse_graph,
    parse_named,
    to_graph6,
)
from .harary import count_colorings_direct, harary_polynomial, partition_coefficients, p_chromatic_number
from .kernels import BACKEND
from .polyring import MPoly, X, Y, Z
from .properties import GraphProperty, builtin, classify, minimal_forbidden, parse_property, standard_catalog
from .xi import xi_polynomial

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundExceeded",
    "GraphProperty",
    "MPoly",
    "MultiGraph",
    "X",
    "Y",
    "Z",
    "build_named",
    "builtin",
    "canonical_form",
    "classify",
    "count_colorings_direct",
    "enumerate_nonisomorphic",
    "from_graph6",
    "harary_polynomial",
    "is_isomorphic",
    "minimal_forbidden",
    "p_chromatic_number",
    "parse_graph",
    "parse_named",
    "parse_property",
    "partition_coefficients",
    "standard_catalog",
    "to_graph6",
    "xi_polynomial",
]
