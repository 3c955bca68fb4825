from .groebner import (
    IdealBasis,
    Membership,
    buchberger,
    ideal_member,
    normal_form,
    s_polynomial,
    spolys_reduce_to_zero,
)
from .oracle import cofactor_search
from .poly import MultiPoly, parse_poly, substitute

__all__ = [
    "IdealBasis",
    "Membership",
    "MultiPoly",
    "buchberger",
    "cofactor_search",
    "ideal_member",
    "normal_form",
    "parse_poly",
    "s_polynomial",
    "spolys_reduce_to_zero",
    "substitute",
]
