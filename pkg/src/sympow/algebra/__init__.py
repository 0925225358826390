"""Exact polynomial arithmetic and linear algebra over Z and Z/2."""

from .f2 import f2_solve
from .intmat import Lattice, abelian_quotient, determinant, integer_kernel, smith_normal_form, solve_integer
from .polynomial import (
    CoefficientMismatch,
    GradedVariable,
    InhomogeneousError,
    Polynomial,
    PolyRing,
    poly_arith,
)
from .quotient import Quotient, Span, image_span, kernel_span, subquotient

__all__ = [
    "CoefficientMismatch",
    "GradedVariable",
    "InhomogeneousError",
    "Lattice",
    "Polynomial",
    "PolyRing",
    "Quotient",
    "Span",
    "abelian_quotient",
    "determinant",
    "f2_solve",
    "image_span",
    "integer_kernel",
    "kernel_span",
    "poly_arith",
    "smith_normal_form",
    "solve_integer",
    "subquotient",
]
