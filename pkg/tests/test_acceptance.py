"""Acceptance criteria. The terminal summary prints one PASS/FAIL line per criterion."""
import random

import numpy as np
import pytest

from fusionchar.builders import (burnside_chartable, cayley_tables, conjugacy_data, data_path,
                                 fibonacci_modular, fibonacci_ring, golden_ratio, hopf_fixtures,
                                 ising_modular, ising_ring, rep_ring_cyclic, rep_ring_of_group,
                                 taft_algebra)
from fusionchar.chartable import (charpoly, compute_character_table, integrality_check,
                                  match_character_tables, verify_orthogonality)
from fusionchar.cli import run_command
from fusionchar.fusion import (FusionRing, fusion_matrices, global_dimension,
                               grothendieck_semisimple, validate_fusion_ring)
from fusionchar.hopf import (check_character_laws, class_functions, fourier_roundtrip, integrals,
                             maschke_indicator, normalized_integrals, radford_check,
                             random_class_function)
from fusionchar.modular import check_q_homomorphism, cross_check, smatrix_chartable, verlinde_fusion
from fusionchar.scalar import CycNumber, PrimeField
from fusionchar.scalar.linalg import same_span

PHI = (1 + 5 ** 0.5) / 2
criterion = pytest.mark.criterion


@criterion(1, "Fibonacci table, class sizes and orthogonality")
def test_fibonacci():
    F = fibonacci_ring()
    T = compute_character_table(F)
    assert np.allclose(T.table, [[1, 1], [PHI, 1 - PHI]], atol=1e-12)
    assert np.allclose(T.class_sizes, [1, PHI ** 2], atol=1e-12)
    dim_c = global_dimension(F).value
    assert dim_c == 2 + golden_ratio()
    assert abs(complex(sum(T.class_sizes)) - (5 + 5 ** 0.5) / 2) < 1e-12
    assert abs(dim_c.to_complex() - (5 + 5 ** 0.5) / 2) < 1e-12
    rep = verify_orthogonality(T, F)
    assert rep.passed and rep.max_residual < 1e-9
    assert {"first_orthogonality", "second_orthogonality"} <= {c.name for c in rep.checks}


@criterion(2, "Ising table, orthogonality and integrality")
def test_ising():
    F = ising_ring()
    T = compute_character_table(F)
    sigma = F.labels.index("sigma")
    assert T.table.shape == (3, 3)
    assert np.allclose(T.table[sigma], [2 ** 0.5, -2 ** 0.5, 0], atol=1e-12)
    orth = verify_orthogonality(T, F)
    assert orth.passed and orth.max_residual < 1e-9
    assert charpoly(fusion_matrices(F)[sigma]) == [1, 0, -2, 0]
    integ = integrality_check(T, F)
    assert integ.passed and integ.max_residual < 1e-9


@criterion(3, "representation rings agree with the group tables")
@pytest.mark.parametrize("name", ["z2", "z3", "z4", "z5", "z6", "s3", "q8"])
def test_group_agreement(name):
    C = cayley_tables()[name]
    T = compute_character_table(rep_ring_of_group(name))
    B = burnside_chartable(C)
    m = match_character_tables(T, B, tol=1e-8)
    assert m is not None and m.residual < 1e-8
    truth = conjugacy_data(C).sizes
    assert sorted(int(round(z.real)) for z in T.class_sizes) == sorted(truth)
    assert [int(round(T.class_sizes[c].real)) for c in range(T.rank)] == \
        [truth[m.columns[c]] for c in range(T.rank)]


@criterion(4, "S-matrix tables equal Verlinde-ring tables")
@pytest.mark.parametrize("M", [fibonacci_modular(), ising_modular()], ids=["fibonacci", "ising"])
def test_modular_cross_check(M):
    S = smatrix_chartable(M)
    V = compute_character_table(verlinde_fusion(M))
    m = match_character_tables(S, V, tol=1e-9, match_rows=False)
    assert m is not None and m.residual < 1e-9
    assert check_q_homomorphism(M).passed
    assert cross_check(M).passed


@criterion(5, "semisimplicity of Rep(Z/2) in characteristic 2 and 0")
def test_characteristic_witness():
    F = rep_ring_cyclic(2)
    gd2 = global_dimension(F, characteristic=2)
    assert not grothendieck_semisimple(F, 2)
    assert gd2.value == PrimeField(2).zero and not gd2.nondegenerate
    gd0 = global_dimension(F)
    assert grothendieck_semisimple(F, 0)
    assert gd0.value == 2 and gd0.nondegenerate


@criterion(6, "Taft algebras: class functions, integrals")
@pytest.mark.parametrize("N", [2, 3, 4])
def test_taft(N):
    H = taft_algebra(N)
    assert len(class_functions(H)) == N
    I = integrals(H)
    assert I.left and I.right and not same_span(I.left, I.right)
    assert not I.unimodular_algebra and I.categorical == []


HOPF = hopf_fixtures()


@criterion(7, "Fourier round trip, Radford identity and Maschke indicator")
@pytest.mark.parametrize("name,maschke", [("kz3", 3), ("ks3", 6), ("double_kz2", None),
                                          ("double_sweedler", 0)])
def test_unimodular_suite(name, maschke):
    H = HOPF[name]
    assert fourier_roundtrip(H).passed
    N = normalized_integrals(H)
    rng = random.Random(2024)
    cf = class_functions(H)
    for _ in range(10):
        assert radford_check(H, N.cointegral, N.integral, random_class_function(H, rng, cf)).passed
    if maschke is not None:
        assert maschke_indicator(H, N.integral) == H.field(maschke)


@criterion(8, "character multiplicativity and independence")
@pytest.mark.parametrize("name", ["kz3", "taft2"])
def test_character_laws(name):
    H = HOPF[name]
    rep = check_character_laws(H, H.sparse(H.pivotal), H.modules)
    assert rep["multiplicativity"].passed and rep["linear_independence"].passed
    assert rep.passed


def _mutant(fusion=None, dual=None, dims=None) -> FusionRing:
    F = fibonacci_ring()
    N = np.array(F.fusion)
    for k, v in (fusion or {}).items():
        N[k] = v
    return FusionRing(F.labels, dual or F.dual, N, dims or F.dims)


ONE, ZERO = CycNumber.rational(1), CycNumber.rational(0)
MUTANTS = {
    "unit": _mutant(fusion={(0, 1, 1): 0}),
    "involution": _mutant(dual=(1, 0)),
    "rigidity": _mutant(fusion={(1, 1, 0): 0}),
    # X * 1 = 1 + X; no rank-2 fault breaks associativity alone
    "associativity": _mutant(fusion={(1, 0, 0): 1}),
    "dims_homomorphism": _mutant(dims=(ONE, ONE)),
    # the zero dimension function is multiplicative, so only d_0 = 1 fails
    "unit_dimension": _mutant(dims=(ZERO, ZERO)),
}


@criterion(9, "single-fault mutations of the Fibonacci ring are rejected")
@pytest.mark.parametrize("axiom", sorted(MUTANTS))
def test_mutations(axiom):
    rep = validate_fusion_ring(MUTANTS[axiom])
    assert not rep.passed
    chk = rep[axiom]
    assert not chk.passed and chk.counterexample is not None


@criterion(10, "identical JSON from repeated runs")
@pytest.mark.parametrize("name", ["fibonacci", "ising", "rep_q8"])
def test_determinism(name):
    argv = ["chartable", str(data_path("fusion", name)), "--out", "json", "--seed", "5"]
    a, b = run_command(argv)[1], run_command(argv)[1]
    assert a.encode() == b.encode()
