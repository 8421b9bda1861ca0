"""Exact algebra kernel: rationals, quadratic surds, polynomials, elimination."""

from fractions import Fraction as Rat

from .algext import AlgExt, SplitFound, over_each_root, root_of
from .poly import (
    NEG_INF,
    Poly,
    discriminant,
    interpolate,
    interpolate_function,
    poly_gcd,
    poly_xgcd,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    sylvester_matrix,
)
from .ratfunc import RatFunc, param_degree, primitive_in_parameter
from .roots import RootReport, locate_roots, quadratic_roots, rational_roots
from .surd import Surd, rational_sqrt_split, squarefree_split

__all__ = [
    "AlgExt",
    "NEG_INF",
    "Poly",
    "Rat",
    "RatFunc",
    "RootReport",
    "SplitFound",
    "Surd",
    "discriminant",
    "interpolate",
    "interpolate_function",
    "locate_roots",
    "over_each_root",
    "param_degree",
    "poly_gcd",
    "poly_xgcd",
    "primitive_in_parameter",
    "quadratic_roots",
    "rational_roots",
    "rational_sqrt_split",
    "resultant",
    "root_of",
    "squarefree_decomposition",
    "squarefree_part",
    "squarefree_split",
    "sylvester_matrix",
]
