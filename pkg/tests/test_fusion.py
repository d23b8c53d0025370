import json

import numpy as np
import pytest

from fusionchar.builders import fibonacci_ring, ising_ring, rep_ring_cyclic
from fusionchar.builders.fixtures import golden_ratio
from fusionchar.errors import ParseError, StructureError, UnsupportedCaseError
from fusionchar.fusion import (FusionRing, dual_matrices_transpose, frobenius_pairing_symmetric,
                               fusion_matrices, fusion_product, global_dimension,
                               grothendieck_semisimple, is_commutative, load_fusion_ring,
                               semisimplicity_report, trace_form, validate_fusion_ring)
from fusionchar.scalar import CycNumber, PrimeFieldElem

PHI = (1 + 5 ** 0.5) / 2
COMMUTATIVE = ["trivial", "fibonacci", "ising", "rep_z1", "rep_z2", "rep_z3", "rep_z4",
               "rep_z5", "rep_z6", "rep_s3", "rep_q8"]
ALL = COMMUTATIVE + ["vec_s3"]


def test_fibonacci_passes_every_axiom():
    rep = validate_fusion_ring(fibonacci_ring())
    assert rep.passed
    assert [c.name for c in rep.checks] == ["nonnegative", "unit", "involution", "rigidity",
                                            "associativity", "dims_homomorphism", "unit_dimension"]


def test_wrong_dims_fail_homomorphism_at_11():
    F = fibonacci_ring().with_dims([CycNumber.rational(1)] * 2)
    chk = validate_fusion_ring(F)["dims_homomorphism"]
    assert not chk.passed and chk.counterexample == (1, 1)


def test_ising_passes():
    assert validate_fusion_ring(ising_ring()).passed


def test_float_dims_accepted_within_tolerance():
    F = fibonacci_ring().with_dims([1.0, PHI])
    assert validate_fusion_ring(F).passed
    assert not validate_fusion_ring(F.with_dims([1.0, PHI + 1e-6])).passed


@pytest.mark.parametrize("name", ALL)
def test_bundled_rings_valid(fx, name):
    F = fx[name]
    assert validate_fusion_ring(F).passed
    assert frobenius_pairing_symmetric(F)
    assert dual_matrices_transpose(F)


def test_fusion_matrices():
    mats = fusion_matrices(fibonacci_ring())
    assert np.array_equal(mats[0], np.eye(2))
    assert mats[1].tolist() == [[0, 1], [1, 1]]
    assert fusion_matrices(ising_ring())[2].tolist() == [[0, 0, 1], [0, 0, 1], [1, 1, 0]]


def test_fusion_product_is_left_multiplication():
    F = fibonacci_ring()
    x = np.array([0, 1])
    assert fusion_product(F, x, x).tolist() == [1, 1]
    assert np.array_equal(fusion_matrices(F)[1] @ x, fusion_product(F, x, x))


def test_commutativity(fx):
    assert is_commutative(fx["fibonacci"])
    assert is_commutative(fx["rep_s3"])
    assert not is_commutative(fx["vec_s3"])
    N = np.array(fx["rep_s3"].fusion)
    N[1, 2, 1] += 1
    assert not is_commutative(FusionRing((), (0, 1, 2), N, fx["rep_s3"].dims))


def test_global_dimensions(fx):
    assert global_dimension(fx["trivial"]).value == 1
    fib = global_dimension(fx["fibonacci"]).value
    assert fib == 2 + golden_ratio()  # 1 + phi^2 = (5 + sqrt 5)/2
    assert abs(fib.to_complex() - (5 + 5 ** 0.5) / 2) < 1e-12
    assert global_dimension(fx["ising"]).value == 4


@pytest.mark.parametrize("name", COMMUTATIVE)
def test_semisimple_iff_nonzero_dimension(fx, name):
    F = fx[name]
    assert grothendieck_semisimple(F) == global_dimension(F).nondegenerate
    assert semisimplicity_report(F).passed


def test_fibonacci_trace_form_nondegenerate():
    # Tr(L_i L_j) = [[2, 1], [1, 3]], determinant 5
    assert trace_form(fibonacci_ring()) == [[2, 1], [1, 3]]
    assert grothendieck_semisimple(fibonacci_ring())


def test_rep_z2_char2_not_semisimple():
    F = rep_ring_cyclic(2)
    gd = global_dimension(F, 2)
    assert gd.value == PrimeFieldElem(2, 0) and not gd.nondegenerate
    assert not grothendieck_semisimple(F, 2)
    assert grothendieck_semisimple(F, 0)
    rep = semisimplicity_report(F, 2)
    assert rep.passed and any("not decidable" in n for n in rep.notes)


@pytest.mark.parametrize("n,p,expected", [(3, 3, False), (3, 2, True), (4, 2, False), (6, 5, True)])
def test_rep_zn_char_p(n, p, expected):
    # F_p[Z/n] is semisimple iff p does not divide n
    assert grothendieck_semisimple(rep_ring_cyclic(n), p) is expected


def test_char_p_noncommutative_unsupported(fx):
    with pytest.raises(UnsupportedCaseError):
        grothendieck_semisimple(fx["vec_s3"], 2)


def test_relabel_round_trip(fx):
    F = fx["rep_q8"]
    G = F.relabel([0, 4, 1, 2, 3])
    assert validate_fusion_ring(G).passed
    assert G.labels[4] == "a" and G.N(4, 4, 0) == 1


def test_json_round_trip(tmp_path, fx):
    path = tmp_path / "ising.json"
    path.write_text(json.dumps(fx["ising"].to_dict()))
    G = load_fusion_ring(path)
    assert G.to_dict() == fx["ising"].to_dict()
    assert G.dims[2] == CycNumber.sqrt2()


@pytest.mark.parametrize("doc", [
    {"rank": 2, "dual": [0, 1], "fusion": [[[1, 0], [0, 1]]], "dims": ["1", "1"]},
    {"rank": 1, "dual": [0], "fusion": [[[1]]], "dims": ["1", "1"]},
    {"rank": 1, "dual": [3], "fusion": [[[1]]], "dims": ["1"]},
    {"rank": 1, "dual": [0], "fusion": [[[0.5]]], "dims": ["1"]},
])
def test_structural_errors(doc):
    with pytest.raises(StructureError):
        FusionRing.from_dict(doc)


def test_parse_errors(tmp_path):
    with pytest.raises(ParseError):
        FusionRing.from_dict({"rank": 1})
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(ParseError):
        load_fusion_ring(bad)
    with pytest.raises(ParseError):
        load_fusion_ring(tmp_path / "missing.json")
