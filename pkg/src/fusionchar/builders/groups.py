"""Finite groups by Cayley table, their group algebras and the class-sum route to characters."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..chartable import CharacterTable, ROUND_DIGITS
from ..errors import InconsistentTableError, ParseError, StructureError
from ..fusion import _read_json
from ..hopf.algebra import HModule, HopfAlgebra
from ..scalar import DEFAULT_TOL, simuldiag
from ..scalar.fields import CyclotomicField, RationalField


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """Group multiplication table on 0..n-1 with identity 0: table[a][b] = a*b."""

    table: tuple
    name: str = ""

    def __post_init__(self):
        t = tuple(tuple(int(x) for x in row) for row in self.table)
        n = len(t)
        if n == 0 or any(len(r) != n for r in t):
            raise StructureError("Cayley table must be square and non-empty")
        full = set(range(n))
        for a in range(n):
            if set(t[a]) != full:
                raise StructureError(f"row {a} is not a permutation")
            if {t[b][a] for b in range(n)} != full:
                raise StructureError(f"column {a} is not a permutation")
        if any(t[0][a] != a or t[a][0] != a for a in range(n)):
            raise StructureError("index 0 is not the identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise StructureError(f"not associative at {(a, b, c)}")
        object.__setattr__(self, "table", t)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)

    def to_dict(self) -> dict:
        out = {"order": self.order, "table": [list(r) for r in self.table]}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> CayleyTable:
        try:
            table = obj["table"]
        except (KeyError, TypeError) as exc:
            raise ParseError("Cayley-table JSON needs a 'table' field") from exc
        if "order" in obj and len(table) != obj["order"]:
            raise StructureError("order does not match the table")
        return cls(table, obj.get("name", ""))


def load_cayley(path) -> CayleyTable:
    return CayleyTable.from_dict(_read_json(path))


def cayley_from_permutations(perms, name: str = "") -> CayleyTable:
    """Cayley table of a list of permutations (tuples) closed under composition.

    The first permutation must be the identity; (p*q)(x) = p(q(x)).
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[x] for x in q)] for q in perms] for p in perms]
    return CayleyTable(table, name)


def cyclic_group(n: int) -> CayleyTable:
    return CayleyTable([[(a + b) % n for b in range(n)] for a in range(n)], f"Z{n}")


def symmetric_group_3() -> CayleyTable:
    # identity, the three transpositions, then the two 3-cycles
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    return cayley_from_permutations(perms, "S3")


def quaternion_group() -> CayleyTable:
    # elements 1, -1, i, -i, j, -j, k, -k as (sign, unit) with unit in {1, i, j, k}
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
             ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
             ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
             ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    idx = {e: n for n, e in enumerate(elems)}

    def mul(a, b):
        s, u = units[(a[1], b[1])]
        return idx[(a[0] * b[0] * s, u)]

    return CayleyTable([[mul(a, b) for b in elems] for a in elems], "Q8")


# -- group algebras -------------------------------------------------------------------


def group_algebra(C: CayleyTable, field=None, modules=()) -> HopfAlgebra:
    """kG with grouplike basis: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1."""
    F = field if field is not None else RationalField()
    n = C.order
    one = F.one
    mult = [[{C.mul(a, b): one} for b in range(n)] for a in range(n)]
    unit = [one if a == 0 else F.zero for a in range(n)]
    comult = [{(a, a): one} for a in range(n)]
    counit = [one] * n
    antipode = [[one if b == C.inv(a) else F.zero for b in range(n)] for a in range(n)]
    return HopfAlgebra(n, F, mult, unit, comult, counit, antipode, pivotal=unit,
                       modules=tuple(modules), name=f"k{C.name}" if C.name else "kG")


def cyclic_group_algebra(n: int, field=None) -> HopfAlgebra:
    """kZ/n over Q(zeta_n) with its n one-dimensional simple modules g -> zeta^j."""
    C = cyclic_group(n)
    F = field if field is not None else CyclotomicField(n)
    mods = []
    if isinstance(F, CyclotomicField) and F.conductor % n == 0:
        z = F.zeta(F.conductor // n)
        mods = [HModule(1, tuple(((z ** (j * a),),) for a in range(n)), f"V{j}", True)
                for j in range(n)]
    return group_algebra(C, F, mods)


@dataclass
class ConjugacyData:
    classes: list
    class_of: list
    sizes: list
    class_algebra: np.ndarray  # K_r K_s = sum_t class_algebra[r, s, t] K_t

    def class_matrices(self) -> list[np.ndarray]:
        """Left multiplication by K_r on class-sum coordinates: (M_r)[t, s]."""
        return [np.array(self.class_algebra[r].T) for r in range(len(self.classes))]


def conjugacy_data(C: CayleyTable) -> ConjugacyData:
    """Conjugacy classes ({1} first, then by smallest element) and the class-sum algebra."""
    n = C.order
    class_of = [-1] * n
    classes = []
    for a in range(n):
        if class_of[a] >= 0:
            continue
        orbit = sorted({C.mul(C.mul(g, a), C.inv(g)) for g in range(n)})
        for b in orbit:
            class_of[b] = len(classes)
        classes.append(tuple(orbit))
    k = len(classes)
    alg = np.zeros((k, k, k), dtype=np.int64)
    for t, cls in enumerate(classes):
        z = cls[0]
        for x in range(n):
            y = C.mul(C.inv(x), z)
            alg[class_of[x], class_of[y], t] += 1
    return ConjugacyData(classes, class_of, [len(c) for c in classes], alg)


def burnside_chartable(C: CayleyTable, tol: float = DEFAULT_TOL, seed: int = 0) -> CharacterTable:
    """Irreducible characters from the simultaneous eigenvectors of the class-sum matrices.

    An eigenvector gives omega_r = |C_r| chi(g_r) / chi(1); the degree follows
    from chi(1)^2 = |G| / sum_r |omega_r|^2 / |C_r|. Rows are sorted with the
    trivial character first, then by degree and values; columns follow
    ``conjugacy_data``.
    """
    data = conjugacy_data(C)
    n = C.order
    sizes = np.array(data.sizes, dtype=float)
    pairs = simuldiag([M.astype(float) for M in data.class_matrices()], tol=tol, seed=seed)
    rows = []
    for _, omega in pairs:
        deg2 = n / float(np.sum(np.abs(omega) ** 2 / sizes))
        deg = round(np.sqrt(deg2))
        if deg < 1 or abs(np.sqrt(deg2) - deg) > 1e-6:
            raise InconsistentTableError(f"character degree {np.sqrt(deg2):.6g} is not an integer")
        chi = omega * deg / sizes
        chi.real[np.abs(chi.real) < tol] = 0.0
        chi.imag[np.abs(chi.imag) < tol] = 0.0
        chi[0] = deg
        rows.append(chi)

    def key(chi):
        trivial = bool(np.all(np.abs(chi - 1) < 1e-6))
        return (not trivial, round(chi[0].real),
                tuple((round(z.real, ROUND_DIGITS) + 0.0, round(z.imag, ROUND_DIGITS) + 0.0)
                      for z in chi[1:]))

    rows.sort(key=key)
    return CharacterTable(np.array(rows), np.array(data.sizes, dtype=complex),
                          tuple(range(len(rows))), tol, tuple(f"chi{i}" for i in range(len(rows))))
