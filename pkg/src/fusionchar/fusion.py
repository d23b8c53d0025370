"""
Fusion rings: data model, axiom checks and Grothendieck-algebra computations.

Simple objects are indexed 0..m with 0 the unit. ``fusion[i, j, k]`` is the
multiplicity of V_k in V_i (x) V_j, ``dual[i]`` the index of V_i^* and
``dims[i]`` the pivotal dimension of V_i (exact cyclotomic or complex float).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParseError, StructureError, UnsupportedCaseError
from .reports import Check, Report
from .scalar import CycNumber, PrimeField, PrimeFieldElem, determinant, kernel_basis
from .scalar.literals import is_exact, parse_scalar, scalar_to_literal, to_complex

FLOAT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class FusionRing:
    labels: tuple
    dual: tuple
    fusion: np.ndarray
    dims: tuple

    def __post_init__(self):
        fusion = np.asarray(self.fusion)
        if fusion.ndim != 3 or len(set(fusion.shape)) != 1:
            raise StructureError(f"fusion tensor must have shape (n, n, n), got {fusion.shape}")
        n = fusion.shape[0]
        if n == 0:
            raise StructureError("fusion ring needs at least the unit object")
        if not np.issubdtype(fusion.dtype, np.integer):
            as_int = np.rint(fusion.astype(float))
            if fusion.dtype == object or not np.array_equal(as_int, fusion):
                raise StructureError("fusion coefficients must be integers")
            fusion = as_int
        fusion = fusion.astype(np.int64)
        fusion.flags.writeable = False
        object.__setattr__(self, "fusion", fusion)
        if len(self.dual) != n:
            raise StructureError(f"dual must have length {n}")
        if any(not isinstance(d, (int, np.integer)) or not 0 <= d < n for d in self.dual):
            raise StructureError("dual entries must be indices in range")
        object.__setattr__(self, "dual", tuple(int(d) for d in self.dual))
        if len(self.dims) != n:
            raise StructureError(f"dims must have length {n}")
        object.__setattr__(self, "dims", tuple(self.dims))
        labels = tuple(str(x) for x in self.labels) if self.labels else tuple(f"V{i}" for i in range(n))
        if len(labels) != n:
            raise StructureError(f"labels must have length {n}")
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return self.fusion.shape[0]

    @property
    def exact(self) -> bool:
        return all(is_exact(d) for d in self.dims)

    def dims_complex(self) -> np.ndarray:
        return np.array([to_complex(d) for d in self.dims], dtype=complex)

    def N(self, i: int, j: int, k: int) -> int:
        return int(self.fusion[i, j, k])

    def relabel(self, perm) -> FusionRing:
        """Ring with old index i renamed perm[i]; perm must fix 0."""
        perm = list(perm)
        if sorted(perm) != list(range(self.rank)) or perm[0] != 0:
            raise ValueError("perm must be a permutation fixing the unit")
        inv = np.argsort(perm)
        fusion = self.fusion[np.ix_(inv, inv, inv)]
        dual = [perm[self.dual[inv[i]]] for i in range(self.rank)]
        return FusionRing(tuple(self.labels[inv[i]] for i in range(self.rank)), tuple(dual),
                          fusion, tuple(self.dims[inv[i]] for i in range(self.rank)))

    def with_dims(self, dims) -> FusionRing:
        return FusionRing(self.labels, self.dual, self.fusion, tuple(dims))

    # serialization

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "labels": list(self.labels),
            "dual": list(self.dual),
            "fusion": self.fusion.tolist(),
            "dims": [scalar_to_literal(d) for d in self.dims],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> FusionRing:
        try:
            fusion = obj["fusion"]
            dual = obj["dual"]
            dims = obj["dims"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"fusion-ring JSON is missing field {exc}") from exc
        try:
            arr = np.array(fusion)
        except ValueError as exc:
            raise StructureError("fusion tensor is ragged") from exc
        if "rank" in obj and arr.ndim >= 1 and arr.shape[0] != obj["rank"]:
            raise StructureError(f"rank {obj['rank']} does not match tensor of shape {arr.shape}")
        return cls(tuple(obj.get("labels") or ()), tuple(dual), arr,
                   tuple(parse_scalar(d) for d in dims))


def load_fusion_ring(path) -> FusionRing:
    return FusionRing.from_dict(_read_json(path))


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


# -- validation ---------------------------------------------------------------


def _first(mask: np.ndarray):
    idx = np.argwhere(mask)
    return tuple(int(x) for x in idx[0]) if len(idx) else None


def validate_fusion_ring(F: FusionRing) -> Report:
    """Check every fusion-ring axiom, recording the first counterexample of each."""
    N = F.fusion
    n = F.rank
    rep = Report("fusion ring validation")
    eye = np.eye(n, dtype=np.int64)

    bad = _first(N < 0)
    rep.add(Check("nonnegative", bad is None, counterexample=bad))

    # N_{0j}^k = N_{j0}^k = delta_{jk}
    bad = _first(N[0] != eye)
    if bad is None:
        bad = _first(N[:, 0, :] != eye)
        detail = "right unit" if bad is not None else ""
    else:
        detail = "left unit"
    rep.add(Check("unit", bad is None, counterexample=bad, detail=detail))

    bad_inv = None
    if F.dual[0] != 0:
        bad_inv = (0,)
    else:
        for i in range(n):
            if F.dual[F.dual[i]] != i:
                bad_inv = (i,)
                break
    rep.add(Check("involution", bad_inv is None, counterexample=bad_inv))

    expected = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        expected[F.dual[j], j] = 1
    bad = _first(N[:, :, 0] != expected)
    rep.add(Check("rigidity", bad is None, counterexample=bad))

    lhs = np.einsum("ije,ekl->ijkl", N, N)
    rhs = np.einsum("jkf,ifl->ijkl", N, N)
    bad = _first(lhs != rhs)
    rep.add(Check("associativity", bad is None, counterexample=bad))

    rep.add(_check_dims(F))

    d0 = F.dims[0]
    if is_exact(d0):
        ok = d0 == 1
        res = None
    else:
        res = abs(complex(d0) - 1)
        ok = res <= FLOAT_TOL
    rep.add(Check("unit_dimension", ok, residual=res, counterexample=None if ok else (0,)))
    return rep


def _check_dims(F: FusionRing) -> Check:
    n = F.rank
    if F.exact:
        d = F.dims
        for i in range(n):
            for j in range(n):
                lhs = sum((int(F.fusion[i, j, k]) * d[k] for k in range(n) if F.fusion[i, j, k]),
                          CycNumber.rational(0))
                if lhs != d[i] * d[j]:
                    return Check("dims_homomorphism", False, counterexample=(i, j),
                                 detail=f"sum_k N_ij^k d_k = {lhs}, d_i d_j = {d[i] * d[j]}")
        return Check("dims_homomorphism", True, residual=0.0)
    d = F.dims_complex()
    lhs = np.einsum("ijk,k->ij", F.fusion.astype(complex), d)
    rhs = np.outer(d, d)
    err = np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs))
    bad = _first(err > FLOAT_TOL)
    return Check("dims_homomorphism", bad is None, residual=float(err.max()), counterexample=bad)


# -- Grothendieck algebra -------------------------------------------------------


def fusion_matrices(F: FusionRing) -> list[np.ndarray]:
    """Left-multiplication matrices: (N_i)[k, j] = N_{ij}^k."""
    return [np.array(F.fusion[i].T) for i in range(F.rank)]


def fusion_product(F: FusionRing, a, b) -> np.ndarray:
    """Product of two coefficient vectors in the basis of simple classes."""
    return np.einsum("i,j,ijk->k", np.asarray(a), np.asarray(b), F.fusion)


def is_commutative(F: FusionRing) -> bool:
    return bool(np.array_equal(F.fusion, F.fusion.transpose(1, 0, 2)))


@dataclass(frozen=True)
class GlobalDimension:
    value: object
    nondegenerate: bool
    characteristic: int = 0


def global_dimension(F: FusionRing, characteristic: int = 0) -> GlobalDimension:
    """dim(C) = sum_i d_i d_{i*}, optionally reduced modulo a prime."""
    terms = [F.dims[i] * F.dims[F.dual[i]] for i in range(F.rank)]
    if characteristic:
        Fp = PrimeField(characteristic)
        if not F.exact:
            raise UnsupportedCaseError("reduction mod p needs exact rational dimensions")
        value = sum((Fp(t if not isinstance(t, CycNumber) else t.to_fraction()) for t in terms),
                    Fp.zero)
        return GlobalDimension(value, bool(value), characteristic)
    if F.exact:
        value = sum(terms, CycNumber.rational(0))
        return GlobalDimension(value, not value.is_zero())
    value = complex(sum(complex(t) for t in terms))
    return GlobalDimension(value, abs(value) > FLOAT_TOL)


def trace_form(F: FusionRing) -> list[list[int]]:
    """Regular-representation trace form Tr(L_i L_j) as exact integers."""
    mats = fusion_matrices(F)
    return [[int(np.trace(A @ B)) for B in mats] for A in mats]


def _frobenius_matrix(F: FusionRing, p: int) -> list[list[PrimeFieldElem]]:
    """Matrix of a -> a^p over F_p; column i holds the coefficients of b_i^p."""
    n = F.rank
    cols = []
    for i in range(n):
        v = np.zeros(n, dtype=object)
        v[0] = 1
        e = np.zeros(n, dtype=object)
        e[i] = 1
        for _ in range(p):
            v = np.array([sum(int(v[a]) * int(e[b]) * int(F.fusion[a, b, k])
                              for a in range(n) if v[a] for b in range(n) if e[b]) % p
                          for k in range(n)], dtype=object)
        cols.append([PrimeFieldElem(p, int(x)) for x in v])
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def frobenius_kernel(F: FusionRing, p: int) -> list[list[PrimeFieldElem]]:
    """Kernel of a -> a^(p^K) over F_p, K minimal with p^K >= rank (commutative rings)."""
    if not is_commutative(F):
        raise UnsupportedCaseError("the p-power map is only linear on commutative rings")
    n = F.rank
    K = 1
    while p ** K < n:
        K += 1
    fr = _frobenius_matrix(F, p)
    power = fr
    for _ in range(K - 1):
        power = [[sum((power[r][t] * fr[t][c] for t in range(n)), PrimeFieldElem(p, 0))
                  for c in range(n)] for r in range(n)]
    return kernel_basis(power, n, PrimeFieldElem(p, 0), PrimeFieldElem(p, 1))


def grothendieck_semisimple(F: FusionRing, characteristic: int = 0) -> bool:
    """Semisimplicity of Gr(C) tensored with a field of the given characteristic.

    Characteristic 0 uses nondegeneracy of the regular trace form; characteristic
    p uses triviality of the iterated Frobenius kernel (the nilradical).
    """
    if characteristic == 0:
        return determinant(trace_form(F)) != 0
    PrimeField(characteristic)
    return not frobenius_kernel(F, characteristic)


def semisimplicity_report(F: FusionRing, characteristic: int = 0) -> Report:
    """Witness the equivalence of semisimplicity of Gr(C) with dim(C) != 0."""
    rep = Report(f"Grothendieck algebra in characteristic {characteristic}")
    ss = grothendieck_semisimple(F, characteristic)
    gd = global_dimension(F, characteristic)
    rep.add(Check("semisimple_iff_nondegenerate", ss == gd.nondegenerate,
                  detail=f"semisimple={ss}, dim(C)={gd.value}"))
    rep.notes.append(f"Gr(C) semisimple: {ss}")
    rep.notes.append(f"dim(C) = {gd.value} ({'nonzero' if gd.nondegenerate else 'zero'})")
    rep.notes.append("semisimplicity of the center and of R(1): not decidable from input")
    return rep


def frobenius_pairing_symmetric(F: FusionRing) -> bool:
    n = F.rank
    return all(F.fusion[i, j, 0] == F.fusion[j, i, 0] == (1 if F.dual[j] == i else 0)
               for i in range(n) for j in range(n))


def dual_matrices_transpose(F: FusionRing) -> bool:
    """N_{i*} equals the transpose of N_i for every i."""
    mats = fusion_matrices(F)
    return all(np.array_equal(mats[F.dual[i]], mats[i].T) for i in range(F.rank))


def lcm_conductor(F: FusionRing) -> int:
    n = 1
    for d in F.dims:
        if isinstance(d, CycNumber):
            n = math.lcm(n, d.conductor)
    return n
