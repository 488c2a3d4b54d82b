"""Lengths of plane Cremona transformations from combinatorial data."""
from .homaloidal import (
    HomaloidalType,
    castelnuovo_predecessor,
    chain,
    enumerate_types,
    homaloidal_type,
    hudson_is_proper,
    is_jonquieres,
    length,
    predecessor,
    s_set,
    wright_distance,
)
from .monomial import IntMatrix2, dynamical_length, ell, gl2_length, word_matrix

__version__ = "0.1.0"

__all__ = [
    "HomaloidalType",
    "IntMatrix2",
    "castelnuovo_predecessor",
    "chain",
    "dynamical_length",
    "ell",
    "enumerate_types",
    "gl2_length",
    "homaloidal_type",
    "hudson_is_proper",
    "is_jonquieres",
    "length",
    "predecessor",
    "s_set",
    "word_matrix",
    "wright_distance",
]
