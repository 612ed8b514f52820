from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.intpoly import binomial
from polyprod.polynomials.intpoly import binomial_irreducible_over_Q
from polyprod.polynomials.intpoly import complex_roots
from polyprod.polynomials.intpoly import discriminant
from polyprod.polynomials.intpoly import evaluate
from polyprod.polynomials.intpoly import resultant
from polyprod.polynomials.intpoly import squarefree_part
from polyprod.polynomials.intpoly import trinomial_discriminant
from polyprod.polynomials.modpoly import ModPoly
from polyprod.polynomials.modpoly import count_roots_mod
from polyprod.polynomials.modpoly import is_square_poly_mod
from polyprod.polynomials.modpoly import roots_mod
from polyprod.polynomials.modpoly import squarefree_decomposition
from polyprod.polynomials.modpoly import value_set_size
from polyprod.polynomials.parser import format_polynomial
from polyprod.polynomials.parser import parse_polynomial


__all__ = [
    "IntPoly",
    "ModPoly",
    "binomial",
    "binomial_irreducible_over_Q",
    "complex_roots",
    "count_roots_mod",
    "discriminant",
    "evaluate",
    "format_polynomial",
    "is_square_poly_mod",
    "parse_polynomial",
    "resultant",
    "roots_mod",
    "squarefree_decomposition",
    "squarefree_part",
    "trinomial_discriminant",
    "value_set_size",
]
