"""Exact rational scalars, polynomials, resultants, gcds and root isolation."""

from .elimination import (
    bareiss_det,
    gcd_bivariate,
    resultant_in_second_var,
    resultant_separated,
    squarefree_part,
    univariate_resultant,
)
from .poly import BPoly, ExactMathError, TriPoly, UPoly
from .rational import Rational, parse, q, qdiv, rational_sqrt, sqrt_bounds, to_str
from .roots import DEFAULT_TOLERANCE, Enclosure, isolate_real_roots, refine, sturm_sequence

__all__ = [
    "BPoly",
    "DEFAULT_TOLERANCE",
    "Enclosure",
    "ExactMathError",
    "Rational",
    "TriPoly",
    "UPoly",
    "bareiss_det",
    "gcd_bivariate",
    "isolate_real_roots",
    "parse",
    "q",
    "qdiv",
    "rational_sqrt",
    "refine",
    "resultant_in_second_var",
    "resultant_separated",
    "sqrt_bounds",
    "squarefree_part",
    "sturm_sequence",
    "to_str",
    "univariate_resultant",
]
