import json

import numpy as np
import pytest

from fusionchar.builders import (CayleyTable, burnside_chartable, cayley_from_permutations,
                                 cayley_tables, conjugacy_data, cyclic_group, data_documents,
                                 data_path, drinfeld_double, group_algebra, load_cayley,
                                 quaternion_group, rep_ring_of_group, symmetric_group_3,
                                 taft_algebra, write_data)
from fusionchar.builders.fixtures import dumps, s3_simple_modules
from fusionchar.chartable import compute_character_table, match_character_tables
from fusionchar.errors import ParameterError, ParseError, StructureError
from fusionchar.fusion import FusionRing, validate_fusion_ring
from fusionchar.hopf import integrals, validate_hopf
from fusionchar.modular import ModularDatum
from fusionchar.scalar.fields import RationalField


@pytest.mark.parametrize("name", sorted(cayley_tables()))
def test_bundled_groups_are_groups(name):
    C = cayley_tables()[name]
    assert all(C.mul(a, C.inv(a)) == 0 for a in range(C.order))


@pytest.mark.parametrize("table,msg", [
    ([], "square"),
    ([[0, 1], [1, 1]], "permutation"),
    ([[1, 0], [0, 1]], "identity"),
    ([[0, 1, 2], [1, 0, 2], [2, 2, 0]], "permutation"),
])
def test_invalid_cayley_tables(table, msg):
    with pytest.raises(StructureError, match=msg):
        CayleyTable(table)


def test_nonassociative_latin_square():
    # a loop of order 5 that is not a group
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(StructureError, match="associative"):
        CayleyTable(t)


def test_cayley_from_permutations_matches_s3():
    C = cayley_from_permutations([(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)])
    assert C.table == symmetric_group_3().table


def test_cayley_json(tmp_path):
    p = tmp_path / "q8.json"
    p.write_text(json.dumps(quaternion_group().to_dict()))
    assert load_cayley(p).table == quaternion_group().table
    p.write_text(json.dumps({"order": 2}))
    with pytest.raises(ParseError):
        load_cayley(p)
    p.write_text(json.dumps({"order": 3, "table": [[0, 1], [1, 0]]}))
    with pytest.raises(StructureError):
        load_cayley(p)


@pytest.mark.parametrize("C,sizes", [
    (cyclic_group(3), [1, 1, 1]),
    (symmetric_group_3(), [1, 3, 2]),
    (quaternion_group(), [1, 1, 2, 2, 2]),
])
def test_conjugacy_class_sizes(C, sizes):
    data = conjugacy_data(C)
    assert data.sizes == sizes
    assert data.classes[0] == (0,)
    assert sorted(g for cls in data.classes for g in cls) == list(range(C.order))


def test_class_algebra_structure_constants_count_products():
    C = symmetric_group_3()
    data = conjugacy_data(C)
    # K_r K_s has |C_r| |C_s| terms in total
    for r in range(3):
        for s in range(3):
            total = sum(data.class_algebra[r, s, t] * data.sizes[t] for t in range(3))
            assert total == data.sizes[r] * data.sizes[s]


def test_z2_burnside():
    B = burnside_chartable(cyclic_group(2))
    assert np.allclose(B.table, [[1, 1], [1, -1]])


def test_s3_burnside_against_explicit_traces():
    """Oracle: traces of the explicit trivial, sign and standard matrices."""
    C = symmetric_group_3()
    data = conjugacy_data(C)
    Q = RationalField()
    oracle = [[float(sum(M.action[cls[0]][i][i] for i in range(M.dim))) for cls in data.classes]
              for M in s3_simple_modules(Q)]
    B = burnside_chartable(C)
    truth = type(B)(np.array(oracle), np.array(data.sizes))
    assert match_character_tables(B, truth, match_rows=True) is not None
    assert np.allclose(B.table, [[1, 1, 1], [1, -1, 1], [2, 0, -1]])


def test_z4_burnside_powers_of_i():
    B = burnside_chartable(cyclic_group(4))
    want = np.array([[1j ** (a * b) for b in range(4)] for a in range(4)])
    assert match_character_tables(B, type(B)(want, np.ones(4)), match_rows=True) is not None


@pytest.mark.parametrize("name", ["z3", "z5", "z6", "s3", "q8"])
def test_burnside_matches_rep_ring(name):
    C = cayley_tables()[name]
    B = burnside_chartable(C)
    T = compute_character_table(rep_ring_of_group(name))
    assert match_character_tables(T, B) is not None
    assert sorted(np.round(T.class_sizes.real).astype(int)) == sorted(conjugacy_data(C).sizes)


@pytest.mark.parametrize("N,power", [(1, 1), (0, 1), (4, 2), (6, 3)])
def test_taft_parameter_errors(N, power):
    with pytest.raises(ParameterError):
        taft_algebra(N, power)


@pytest.mark.parametrize("n", [2, 3])
def test_double_of_cyclic_group(n):
    D = drinfeld_double(group_algebra(cyclic_group(n)))
    assert D.dim == n * n and validate_hopf(D).passed
    I = integrals(D)
    assert I.unimodular_algebra and I.unimodular_category


def test_fixture_contents(fx):
    assert fx["fibonacci"].rank == 2
    std = fx["rep_s3"].labels.index("std")
    assert list(fx["rep_s3"].fusion[std, std]) == [1, 1, 1]
    i = fx["modular_ising"]
    assert complex(i.matrix()[2, 2]) == 0
    assert fx["taft_parameters"] == ((2, 1), (3, 1), (4, 1))


def test_fixture_rings_validate(fx):
    for k, v in fx.items():
        if isinstance(v, FusionRing):
            assert validate_fusion_ring(v).passed, k


def test_packaged_data_is_current():
    for rel, doc in data_documents().items():
        kind, fname = rel.split("/")
        assert data_path(kind, fname[:-5]).read_text() == dumps(doc), rel


def test_write_data(tmp_path):
    paths = write_data(tmp_path)
    assert len(paths) == len(data_documents())
    ring = FusionRing.from_dict(json.loads((tmp_path / "fusion" / "ising.json").read_text()))
    assert validate_fusion_ring(ring).passed
    ModularDatum.from_dict(json.loads((tmp_path / "modular" / "ising.json").read_text()))
