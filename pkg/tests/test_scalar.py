import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from fusionchar.errors import CommutativityError, DegeneracyError, ParseError
from fusionchar.scalar import (CycNumber, PrimeField, PrimeFieldElem, RationalField, cyc_arith,
                               cyclotomic_poly, kernel_basis, parse_scalar, rank,
                               recognize, scalar_to_literal, simuldiag, solve, totient)

PHI = (1 + math.sqrt(5)) / 2


def test_golden_ratio_relation():
    z = CycNumber.zeta(5)
    x = cyc_arith(z + z ** 4, CycNumber.rational(1, 5), "add")
    assert abs(x.to_complex() - PHI) < 1e-12


def test_inverse_times_self_is_one():
    a = CycNumber.rational(2, 3) + CycNumber.zeta(3)
    assert cyc_arith(a, cyc_arith(a, op="inverse"), "mul") == CycNumber.rational(1, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12])
def test_conjugate_of_zeta(n):
    z = CycNumber.zeta(n)
    assert z.conjugate() == CycNumber.zeta(n, n - 1)
    assert abs(z.conjugate().to_complex() - cmath.exp(-2j * cmath.pi / n)) < 1e-12


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycNumber(5).inverse()


def test_mixed_conductors_lift_to_lcm():
    s = CycNumber.zeta(3) + CycNumber.zeta(4)
    assert s.conductor == 12
    assert abs(s.to_complex() - (cmath.exp(2j * cmath.pi / 3) + 1j)) < 1e-12


def test_sqrt2_squares_to_two():
    assert CycNumber.sqrt2() ** 2 == CycNumber.rational(2)


@pytest.mark.parametrize("n,phi", [(1, 1), (4, 2), (5, 4), (8, 4), (12, 4), (24, 8)])
def test_totient(n, phi):
    assert totient(n) == phi


@pytest.mark.parametrize("n,poly", [(1, (-1, 1)), (2, (1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1))])
def test_cyclotomic_poly_low_degree_first(n, poly):
    assert tuple(cyclotomic_poly(n)) == poly


def test_json_literal_round_trip():
    x = CycNumber.from_exponents(8, {1: Fraction(1, 2), 3: -2})
    assert parse_scalar(scalar_to_literal(x)) == x
    assert parse_scalar("3/4") == CycNumber.rational(Fraction(3, 4))
    assert parse_scalar(0.5) == complex(0.5)
    assert parse_scalar([1.0, -2.0]) == complex(1, -2)


@pytest.mark.parametrize("bad", [True, "x/y", {"conductor": 5, "coeffs": ["1"]}, [1, 2, 3]])
def test_bad_literals_rejected(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_recognize_golden_ratio():
    phi = recognize(PHI, 5, tol=1e-9)
    assert phi is not None and phi * phi == phi + 1
    assert recognize(0.1234567, 5, tol=1e-9) is None


def test_prime_field_arithmetic():
    a = PrimeFieldElem(7, 3)
    assert a * a.inverse() == PrimeFieldElem(7, 1)
    assert (a + 5).value == 1
    assert PrimeField(3)(3) == PrimeField(3).zero


def test_rational_field_parse():
    Q = RationalField()
    assert Q.parse("2/4") == Fraction(1, 2)
    assert Q.parse(3.0) == 3
    with pytest.raises(ParseError):
        Q.parse(0.5)


# -- kernel ------------------------------------------------------------------------------


def test_kernel_of_zero_matrix_is_everything():
    rows = [[Fraction(0)] * 2] * 2
    assert len(kernel_basis(rows)) == 2


def test_kernel_of_identity_is_empty():
    rows = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert kernel_basis(rows) == []


def test_kernel_rank_one():
    (v,) = kernel_basis([[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]])
    assert v[0] == -v[1] != 0


def test_kernel_over_cyclotomic_and_prime_fields():
    z = CycNumber.zeta(3)
    one = CycNumber.rational(1, 3)
    (v,) = kernel_basis([[one, z], [z, z * z]])
    assert one * v[0] + z * v[1] == CycNumber(3)
    F = PrimeField(2)
    (w,) = kernel_basis([[F(1), F(1)]])
    assert w[0] + w[1] == F.zero


def test_solve_and_rank():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    x = solve(A, [Fraction(3), Fraction(4)])
    assert x == [Fraction(1), Fraction(1)]
    assert rank(A) == 2


# -- simultaneous diagonalization -------------------------------------------------------


def test_simuldiag_identity():
    pairs = simuldiag([np.eye(3)])
    assert len(pairs) == 3
    assert all(abs(lam[0] - 1) < 1e-12 for _, lam in pairs)


def test_simuldiag_diagonal():
    pairs = simuldiag([np.diag([1.0, 2.0]), np.diag([3.0, 4.0])])
    got = sorted(tuple(np.round(lam.real, 12)) for _, lam in pairs)
    assert got == [(1.0, 3.0), (2.0, 4.0)]


def test_simuldiag_fibonacci():
    pairs = simuldiag([np.eye(2), np.array([[0.0, 1.0], [1.0, 1.0]])])
    got = sorted(lam[1].real for _, lam in pairs)
    assert abs(got[0] - (1 - PHI)) < 1e-12 and abs(got[1] - PHI) < 1e-12


def test_simuldiag_rejects_noncommuting():
    with pytest.raises(CommutativityError):
        simuldiag([np.array([[0.0, 1.0], [0.0, 0.0]]), np.array([[0.0, 0.0], [1.0, 0.0]])])


def test_simuldiag_jordan_block_is_degenerate():
    with pytest.raises(DegeneracyError):
        simuldiag([np.array([[1.0, 1.0], [0.0, 1.0]])], max_resample=3)
