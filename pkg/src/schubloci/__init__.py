"""Schubert, involution Schubert and Schur P/Q polynomials with exact
degeneracy-locus formula checks."""

from .perms import Permutation, PermutationError
from .poly import Polynomial, PolynomialError

__all__ = ["Permutation", "PermutationError", "Polynomial", "PolynomialError"]
__version__ = "0.1.0"
