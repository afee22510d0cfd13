"""Exact scalar, polynomial and matrix arithmetic over Q(i)."""

from .binform import (BinaryForm, bf_coprime_basis, bf_gcd, bf_squarefree,
                      bf_valuation, coprime_basis, poly_gcd, squarefree_part,
                      valuation)
from .matrix import (Matrix, adjugate, congruent_diagonalize, det, inverse,
                     nullspace, rank, solve)
from .mpoly import MPoly, grevlex_key
from .scalar import I, ONE, ZERO, Scalar, format_scalar, parse_scalar, scalar

__all__ = [
    "BinaryForm", "I", "MPoly", "Matrix", "ONE", "Scalar", "ZERO",
    "adjugate", "bf_coprime_basis", "bf_gcd", "bf_squarefree", "bf_valuation",
    "congruent_diagonalize", "coprime_basis", "det", "format_scalar",
    "grevlex_key", "inverse", "nullspace", "parse_scalar", "poly_gcd",
    "rank", "scalar", "solve", "squarefree_part", "valuation",
]
