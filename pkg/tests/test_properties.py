import cmath
import random
from fractions import Fraction

import numpy as np
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from fusionchar.builders import fixtures, hopf_fixtures, rep_ring_cyclic
from fusionchar.chartable import (compute_character_table, match_character_tables,
                                  verify_orthogonality)
from fusionchar.fusion import validate_fusion_ring
from fusionchar.hopf import (center, class_functions, convolution, fourier, fourier_inv,
                             normalized_integrals, radford_check, random_class_function)
from fusionchar.modular import ModularDatum, verlinde_fusion
from fusionchar.scalar import CycNumber, kernel_basis, rank, simuldiag

FIX = fixtures()
COMMUTATIVE = ["fibonacci", "ising", "rep_z4", "rep_z5", "rep_z6", "rep_s3", "rep_q8"]
coeff = st.integers(-5, 5)


@st.composite
def cyc_pair(draw):
    n = draw(st.integers(1, 24))
    a = {k: draw(coeff) for k in range(n)}
    b = {k: draw(coeff) for k in range(n)}
    return n, CycNumber.from_exponents(n, a), CycNumber.from_exponents(n, b)


@given(cyc_pair())
def test_complex_embedding_is_a_ring_map(pair):
    n, a, b = pair
    za, zb = a.to_complex(), b.to_complex()
    scale = max(1.0, abs(za), abs(zb)) ** 2
    assert abs((a + b).to_complex() - (za + zb)) <= 1e-9 * scale
    assert abs((a * b).to_complex() - za * zb) <= 1e-9 * scale
    assert abs(a.conjugate().to_complex() - za.conjugate()) <= 1e-9 * scale


@given(cyc_pair())
def test_cyclotomic_inverse(pair):
    _, a, _ = pair
    if not a.is_zero():
        assert a * a.inverse() == CycNumber.rational(1)


@given(st.integers(1, 24), st.integers(0, 23), st.integers(0, 23))
def test_zeta_powers(n, j, k):
    z = CycNumber.zeta(n)
    assert z ** j * z ** k == z ** ((j + k) % n)
    assert abs((z ** j).to_complex() - cmath.exp(2j * cmath.pi * j / n)) < 1e-9


@given(cyc_pair(), st.integers(1, 24))
def test_galois_is_a_ring_map(pair, j):
    n, a, b = pair
    if np.gcd(j, n) != 1:
        return
    assert (a * b).galois(j) == a.galois(j) * b.galois(j)
    assert (a + b).galois(j) == a.galois(j) + b.galois(j)


@given(cyc_pair(), st.integers(1, 4))
def test_lifting_preserves_value(pair, m):
    n, a, _ = pair
    assert a.lift(n * m) == a
    assert abs(a.lift(n * m).to_complex() - a.to_complex()) < 1e-9 * max(1, abs(a.to_complex()))


matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=100)
@given(matrices)
def test_kernel_against_sympy(rows):
    """Oracle: sympy's exact nullspace."""
    M = [[Fraction(x) for x in r] for r in rows]
    ncols = len(rows[0])
    K = kernel_basis(M, ncols)
    S = sympy.Matrix(rows)
    assert len(K) == len(S.nullspace())
    assert rank(M, ncols) == S.rank()
    for v in K:
        assert all(sum(r[j] * v[j] for j in range(ncols)) == 0 for r in M)
    if K:
        assert sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v]
                             for v in K]).rank() == len(K)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 10 ** 6))
def test_simuldiag_polynomials_of_one_matrix(n, seed):
    rng = np.random.default_rng(seed)
    P = rng.normal(size=(n, n)) + np.eye(n) * 3
    D = np.diag(np.arange(1, n + 1) + rng.uniform(0, 0.4, size=n))
    A = P @ D @ np.linalg.inv(P)
    mats = [A, A @ A, A @ A - 2 * A + np.eye(n)]
    pairs = simuldiag(mats, seed=seed)
    assert len(pairs) == n
    for v, lam in pairs:
        for M, l in zip(mats, lam):
            assert np.linalg.norm(M @ v - l * v) <= 1e-7 * np.linalg.norm(M, 2) * np.linalg.norm(v)
    got = sorted(lam[0].real for _, lam in pairs)
    assert np.allclose(got, sorted(np.diag(D)), atol=1e-7)


@st.composite
def ring_and_perm(draw):
    name = draw(st.sampled_from(COMMUTATIVE))
    F = FIX[name]
    rest = draw(st.permutations(list(range(1, F.rank))))
    return F, (0, *rest)


@settings(max_examples=30, deadline=None)
@given(ring_and_perm())
def test_relabel_invariance(arg):
    """Relabeling permutes the rows of the table by perm and its columns by a fixed bijection."""
    F, perm = arg
    T = compute_character_table(F)
    U = compute_character_table(F.relabel(perm))
    shifted = type(T)(U.table[list(perm)], U.class_sizes)
    m = match_character_tables(T, shifted, match_rows=False)
    assert m is not None and m.rows == tuple(range(F.rank))
    assert np.allclose(sorted(T.class_sizes.real), sorted(U.class_sizes.real))


@settings(max_examples=12, deadline=None)
@given(st.integers(1, 12), st.integers(0, 1000))
def test_cyclic_tables_are_orthogonal(n, seed):
    F = rep_ring_cyclic(n)
    T = compute_character_table(F, seed=seed)
    assert verify_orthogonality(T, F).passed
    assert np.allclose(T.class_sizes, 1)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["modular_fibonacci", "modular_ising", "modular_trivial"]),
       st.floats(0.2, 5.0), st.data())
def test_verlinde_output_validates(name, scale, data):
    S = FIX[name].matrix()
    perm = [0, *data.draw(st.permutations(list(range(1, S.shape[0]))))]
    M = ModularDatum((S[np.ix_(perm, perm)] * scale).tolist(), tuple(str(p) for p in perm))
    F = verlinde_fusion(M)
    assert validate_fusion_ring(F).passed
    assert np.allclose(np.sort(F.dims_complex().real),
                       np.sort(verlinde_fusion(FIX[name]).dims_complex().real))


HOPF = hopf_fixtures()


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(["kz3", "taft2", "double_kz2"]), st.integers(0, 10 ** 6))
def test_convolution_is_associative(name, seed):
    H = HOPF[name]
    rng = random.Random(seed)
    f, g, h = ([H.field(rng.randint(-3, 3)) for _ in range(H.dim)] for _ in range(3))
    assert convolution(H, convolution(H, f, g), h) == convolution(H, f, convolution(H, g, h))


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["kz3", "ks3", "double_kz2", "double_sweedler"]), st.integers(0, 10 ** 6))
def test_fourier_inverts_on_random_central_elements(name, seed):
    H = HOPF[name]
    N = normalized_integrals(H)
    rng = random.Random(seed)
    z: dict = {}
    for b in center(H):
        c = H.field(rng.randint(-3, 3))
        for k, x in enumerate(b):
            if x:
                z[k] = z.get(k, H.zero) + c * x
    z = {k: v for k, v in z.items() if v}
    assert fourier_inv(H, N.integral, fourier(H, N.cointegral, z)) == z


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["kz3", "ks3", "double_kz2", "double_sweedler"]), st.integers(0, 10 ** 6))
def test_radford_on_random_class_functions(name, seed):
    H = HOPF[name]
    N = normalized_integrals(H)
    f = random_class_function(H, random.Random(seed), class_functions(H))
    assert radford_check(H, N.cointegral, N.integral, f).passed
