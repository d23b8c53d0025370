"""Bundled fixtures: fusion rings, modular data, Cayley tables and Hopf algebras.

Everything is constructed in code; ``write_data`` serializes the same objects
to the JSON files shipped under ``fusionchar/data``.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

from ..fusion import FusionRing
from ..hopf.algebra import HModule
from ..modular import ModularDatum
from ..scalar.cyclotomic import CycNumber
from ..scalar.fields import PrimeField, RationalField
from .double import drinfeld_double, sweedler_double
from .groups import (CayleyTable, cyclic_group, cyclic_group_algebra, group_algebra,
                     quaternion_group, symmetric_group_3)
from .taft import taft_algebra

TAFT_PARAMETERS = ((2, 1), (3, 1), (4, 1))
GROUP_NAMES = ("z1", "z2", "z3", "z4", "z5", "z6", "s3", "q8")


def golden_ratio() -> CycNumber:
    """phi = 1 + zeta_5 + zeta_5^4 = (1 + sqrt 5)/2."""
    return CycNumber.from_exponents(5, {0: 1, 1: 1, 4: 1})


def _ring(labels, table, dual, dims) -> FusionRing:
    """Ring from products table[i][j] = {k: N_ij^k}."""
    n = len(labels)
    N = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k, c in table[i][j].items():
                N[i, j, k] = c
    return FusionRing(tuple(labels), tuple(dual), N, tuple(dims))


def trivial_ring() -> FusionRing:
    return _ring(["1"], [[{0: 1}]], [0], [CycNumber.rational(1)])


def fibonacci_ring() -> FusionRing:
    table = [[{0: 1}, {1: 1}], [{1: 1}, {0: 1, 1: 1}]]
    return _ring(["1", "X"], table, [0, 1], [CycNumber.rational(1), golden_ratio()])


def ising_ring() -> FusionRing:
    one = CycNumber.rational(1)
    table = [[{0: 1}, {1: 1}, {2: 1}],
             [{1: 1}, {0: 1}, {2: 1}],
             [{2: 1}, {2: 1}, {0: 1, 1: 1}]]
    return _ring(["1", "eps", "sigma"], table, [0, 1, 2], [one, one, CycNumber.sqrt2()])


def group_ring(C: CayleyTable, labels=None) -> FusionRing:
    """The fusion ring Z[G] (pointed, dims 1); non-commutative for non-abelian G."""
    n = C.order
    table = [[{C.mul(a, b): 1} for b in range(n)] for a in range(n)]
    labels = labels or [f"g{a}" for a in range(n)]
    return _ring(labels, table, [C.inv(a) for a in range(n)], [CycNumber.rational(1)] * n)


def rep_ring_cyclic(n: int) -> FusionRing:
    """Rep(Z/n): characters chi_a with chi_a chi_b = chi_{a+b}."""
    return group_ring(cyclic_group(n), [f"chi{a}" for a in range(n)])


def rep_ring_s3() -> FusionRing:
    one = CycNumber.rational(1)
    table = [[{0: 1}, {1: 1}, {2: 1}],
             [{1: 1}, {0: 1}, {2: 1}],
             [{2: 1}, {2: 1}, {0: 1, 1: 1, 2: 1}]]
    return _ring(["triv", "sgn", "std"], table, [0, 1, 2], [one, one, CycNumber.rational(2)])


def rep_ring_q8() -> FusionRing:
    # four characters of the Klein quotient and the 2-dim irrep rho: rho^2 = sum of the four
    one = CycNumber.rational(1)
    klein = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    table = [[{klein[a][b]: 1} if a < 4 and b < 4 else None for b in range(5)] for a in range(5)]
    for a in range(4):
        table[a][4] = {4: 1}
        table[4][a] = {4: 1}
    table[4][4] = {0: 1, 1: 1, 2: 1, 3: 1}
    return _ring(["triv", "a", "b", "c", "rho"], table, [0, 1, 2, 3, 4],
                 [one, one, one, one, CycNumber.rational(2)])


def fibonacci_modular() -> ModularDatum:
    phi = (1 + 5 ** 0.5) / 2
    c = 1 / (2 + phi) ** 0.5
    return ModularDatum([[c, c * phi], [c * phi, -c]], ("1", "X"))


def ising_modular() -> ModularDatum:
    half = CycNumber.rational(1) / 2
    r = CycNumber.sqrt2() * half
    return ModularDatum([[half, half, r], [half, half, -r], [r, -r, CycNumber.rational(0)]],
                        ("1", "eps", "sigma"))


def trivial_modular() -> ModularDatum:
    return ModularDatum([[CycNumber.rational(1)]], ("1",))


def cayley_tables() -> dict[str, CayleyTable]:
    out = {f"z{n}": cyclic_group(n) for n in range(1, 7)}
    out["s3"] = symmetric_group_3()
    out["q8"] = quaternion_group()
    return out


def s3_simple_modules(F) -> tuple:
    """Trivial, sign and 2-dim standard representation of S3 (element order of symmetric_group_3)."""
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    sign = [1, -1, -1, -1, 1, 1]

    def std(p):
        # coordinates of p(e0 - e1), p(e1 - e2) in the basis e0 - e1, e1 - e2
        cols = []
        for u, v in ((0, 1), (1, 2)):
            x = [0, 0, 0]
            x[p[u]] += 1
            x[p[v]] -= 1
            cols.append((x[0], x[0] + x[1]))
        return [[F(cols[c][r]) for c in range(2)] for r in range(2)]

    return (HModule(1, [[[F.one]] for _ in perms], "triv", True),
            HModule(1, [[[F(s)]] for s in sign], "sgn", True),
            HModule(2, [std(p) for p in perms], "std", True))


@lru_cache(maxsize=None)
def hopf_fixtures() -> dict:
    Q = RationalField()
    out = {
        "k": group_algebra(cyclic_group(1), Q),
        "kz2": cyclic_group_algebra(2),
        "kz3": cyclic_group_algebra(3),
        "kz3_f3": group_algebra(cyclic_group(3), PrimeField(3)),
        "ks3": group_algebra(symmetric_group_3(), Q, s3_simple_modules(Q)),
    }
    for N, w in TAFT_PARAMETERS:
        out[f"taft{N}"] = taft_algebra(N, w)
    out["double_kz2"] = drinfeld_double(group_algebra(cyclic_group(2), Q))
    out["double_sweedler"] = sweedler_double()
    return out


@lru_cache(maxsize=None)
def _fusion_and_modular() -> tuple[dict, dict]:
    fusion = {"trivial": trivial_ring(), "fibonacci": fibonacci_ring(), "ising": ising_ring()}
    for n in range(1, 7):
        fusion[f"rep_z{n}"] = rep_ring_cyclic(n)
    fusion["rep_s3"] = rep_ring_s3()
    fusion["rep_q8"] = rep_ring_q8()
    fusion["vec_s3"] = group_ring(symmetric_group_3())
    modular = {"trivial": trivial_modular(), "fibonacci": fibonacci_modular(),
               "ising": ising_modular()}
    return fusion, modular


def fixtures() -> dict:
    """Named fixtures. Fusion rings use bare names ("fibonacci", "rep_s3"); the other
    kinds are prefixed: "modular_*", "group_*", "hopf_*"; "taft_parameters" lists (N, power)."""
    fusion, modular = _fusion_and_modular()
    out = dict(fusion)
    out.update({f"modular_{k}": v for k, v in modular.items()})
    out.update({f"group_{k}": v for k, v in cayley_tables().items()})
    out.update({f"hopf_{k}": v for k, v in hopf_fixtures().items()})
    out["taft_parameters"] = TAFT_PARAMETERS
    return out


def rep_ring_of_group(name: str) -> FusionRing:
    """Bundled representation ring for a bundled group name ("z3", "s3", "q8")."""
    fusion, _ = _fusion_and_modular()
    return fusion[f"rep_{name}"]


def data_documents() -> dict[str, dict]:
    """Relative path -> JSON document for every bundled data file."""
    fusion, modular = _fusion_and_modular()
    docs = {f"fusion/{k}.json": v.to_dict() for k, v in fusion.items()}
    docs.update({f"modular/{k}.json": v.to_dict() for k, v in modular.items()})
    docs.update({f"groups/{k}.json": v.to_dict() for k, v in cayley_tables().items()})
    docs.update({f"hopf/{k}.json": v.to_dict() for k, v in hopf_fixtures().items()})
    return docs


def dumps(doc) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def write_data(directory) -> list[Path]:
    root = Path(directory)
    written = []
    for rel, doc in sorted(data_documents().items()):
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(doc))
        written.append(path)
    return written


def data_path(kind: str, name: str) -> Path:
    """Path of a bundled data file, e.g. data_path("fusion", "fibonacci")."""
    return Path(str(resources.files("fusionchar") / "data" / kind / f"{name}.json"))

