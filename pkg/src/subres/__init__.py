"""Exact subresultants of polynomial systems, from coefficients and from roots."""

from .exactmath import (
    LabeledMatrix,
    Rational,
    delete_columns,
    determinant,
    matrix,
    rational_from_string,
    rational_to_string,
    vertical_stack,
)
from .poly import Monomial, Polynomial, mono

__all__ = [
    "LabeledMatrix",
    "Monomial",
    "Polynomial",
    "Rational",
    "delete_columns",
    "determinant",
    "matrix",
    "mono",
    "rational_from_string",
    "rational_to_string",
    "vertical_stack",
]

__version__ = "0.1.0"
