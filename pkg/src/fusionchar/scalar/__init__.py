"""Scalars and the linear-algebra kernel shared by every other module."""
from fractions import Fraction as Rational

from .cyclotomic import CycNumber, cyclotomic_poly, recognize, totient
from .fields import CyclotomicField, PrimeField, RationalField, field_from_json
from .linalg import RowReducer, determinant, inverse, kernel_basis, rank, solve
from .literals import is_exact, parse_scalar, scalar_to_literal, to_complex
from .primefield import PrimeFieldElem
from .simuldiag import DEFAULT_MAX_RESAMPLE, DEFAULT_TOL, simuldiag


def cyc_arith(a, b=None, op: str = "add"):
    """Dispatch ``add``, ``mul``, ``inverse`` or ``conjugate`` on cyclotomic numbers."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inverse":
        return a.inverse()
    if op == "conjugate":
        return a.conjugate()
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "Rational", "CycNumber", "PrimeFieldElem", "RationalField", "CyclotomicField", "PrimeField",
    "field_from_json", "cyclotomic_poly", "totient", "recognize", "cyc_arith", "kernel_basis",
    "rank", "solve", "inverse", "determinant", "RowReducer", "simuldiag", "DEFAULT_TOL",
    "DEFAULT_MAX_RESAMPLE", "parse_scalar", "scalar_to_literal", "to_complex", "is_exact",
]
