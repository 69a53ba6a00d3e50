"""Planar octahedron network families with exact degree-based index arithmetic."""

from .radicals import (
    NegativeRadicand,
    NonInvertibleDenominator,
    RadicalValue,
    Rational,
    sqrt_int,
    sqrt_of_rational,
    squarefree_split,
)

__version__ = "0.1.0"

__all__ = [
    "NegativeRadicand",
    "NonInvertibleDenominator",
    "RadicalValue",
    "Rational",
    "sqrt_int",
    "sqrt_of_rational",
    "squarefree_split",
    "__version__",
]
