"""
Modular data: fusion rules from an S-matrix and the table (s_ij / s_0j).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chartable import (CharacterTable, _column_key, _sizes, compute_character_table,
                        match_character_tables)
from .errors import DegeneracyError, MismatchError, NotModularError, ParseError, StructureError
from .fusion import FusionRing, _read_json
from .reports import Check, Report
from .scalar import DEFAULT_TOL
from .scalar.literals import is_exact, parse_scalar, scalar_to_literal, to_complex

VERLINDE_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class ModularDatum:
    s: tuple
    labels: tuple = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.s)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise StructureError("S-matrix must be square and non-empty")
        object.__setattr__(self, "s", rows)
        if self.labels and len(self.labels) != n:
            raise StructureError(f"labels must have length {n}")
        object.__setattr__(self, "labels", tuple(self.labels) if self.labels else
                           tuple(f"V{i}" for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.s)

    @property
    def exact(self) -> bool:
        return all(is_exact(x) for row in self.s for x in row)

    def matrix(self) -> np.ndarray:
        return np.array([[to_complex(x) for x in row] for row in self.s], dtype=complex)

    def perturbed(self, i: int, j: int, eps: float) -> ModularDatum:
        """Copy with s_ij shifted by eps (symmetry deliberately broken)."""
        rows = [list(r) for r in self.matrix()]
        rows[i][j] += eps
        return ModularDatum(rows, self.labels)

    def to_dict(self) -> dict:
        return {"labels": list(self.labels),
                "s": [[scalar_to_literal(x) for x in row] for row in self.s]}

    @classmethod
    def from_dict(cls, obj: dict) -> ModularDatum:
        try:
            s = obj["s"]
        except (KeyError, TypeError) as exc:
            raise ParseError("modular-datum JSON needs an 's' field") from exc
        if not isinstance(s, list) or not all(isinstance(r, list) for r in s):
            raise StructureError("'s' must be a list of rows")
        return cls([[parse_scalar(x) for x in row] for row in s], tuple(obj.get("labels") or ()))


def load_modular_datum(path) -> ModularDatum:
    return ModularDatum.from_dict(_read_json(path))


def _check_shape(M: ModularDatum) -> np.ndarray:
    S = M.matrix()
    if np.abs(S[0]).min() <= DEFAULT_TOL:
        raise DegeneracyError("s_0j vanishes for some j")
    return S


def verlinde_fusion(M: ModularDatum, tol: float = VERLINDE_TOL) -> FusionRing:
    """Fusion ring recovered from S by the Verlinde sum.

    The sum is divided by sum_r |s_0r|^2 so an overall rescaling of S does
    not matter; for a unitary S that factor is 1.
    """
    S = _check_shape(M)
    n = M.rank
    if abs(np.linalg.det(S)) <= tol * max(1.0, np.abs(S).max()) ** n:
        raise NotModularError("S-matrix is not invertible")
    norm = float(np.sum(np.abs(S[0]) ** 2))
    raw = np.einsum("ir,jr,kr,r->ijk", S, S, S.conj(), 1 / S[0]) / norm
    N = np.rint(raw.real)
    resid = np.abs(raw - N)
    if resid.max() > tol:
        bad = np.unravel_index(np.argmax(resid), resid.shape)
        raise NotModularError(f"Verlinde coefficient {tuple(int(x) for x in bad)} is "
                              f"{raw[bad]:.6g}, not an integer (residual {resid.max():.3g})")
    if (N < 0).any():
        bad = tuple(int(x) for x in np.argwhere(N < 0)[0])
        raise NotModularError(f"Verlinde coefficient {bad} is negative")
    N = N.astype(np.int64)
    dual = []
    for i in range(n):
        js = np.nonzero(N[i, :, 0])[0]
        if len(js) != 1 or N[i, js[0], 0] != 1:
            raise NotModularError(f"object {i} has no unique dual")
        dual.append(int(js[0]))
    if M.exact:
        s00 = M.s[0][0]
        dims = tuple(M.s[0][j] / s00 for j in range(n))
    else:
        dims = tuple(complex(S[0, j] / S[0, 0]) for j in range(n))
    return FusionRing(M.labels, tuple(dual), N, dims)


def smatrix_chartable(M: ModularDatum, ring: FusionRing | None = None,
                      tol: float = DEFAULT_TOL) -> CharacterTable:
    """Table with entries s_ij / s_0j, columns in canonical order."""
    S = _check_shape(M)
    n = M.rank
    F = ring if ring is not None else verlinde_fusion(M)
    raw = S / S[0][None, :]
    raw[0, :] = 1.0
    exact_raw = None
    if M.exact:
        exact_raw = [[M.s[i][j] / M.s[0][j] for j in range(n)] for i in range(n)]
    d = F.dims_complex()
    dim_c = complex(sum(d[i] * d[F.dual[i]] for i in range(n)))
    sizes = _sizes(raw, F, dim_c)
    rest = sorted(range(1, n), key=lambda c: _column_key(raw[:, c], sizes[c]))
    order = (0, *rest)
    exact = None
    if exact_raw is not None:
        exact = tuple(tuple(exact_raw[i][c] for c in order) for i in range(n))
    return CharacterTable(raw[:, order], sizes[list(order)], order, tol, M.labels, exact)


def check_q_homomorphism(M: ModularDatum, tol: float = VERLINDE_TOL,
                         ring: FusionRing | None = None) -> Report:
    """Q(chi_i) = sum_j (s_ij/d_j) e_j is multiplicative for the componentwise product.

    ``ring`` supplies the fusion rules; by default they come from the Verlinde sum.
    """
    S = M.matrix()
    F = ring if ring is not None else verlinde_fusion(M)
    q = S / S[0][None, :]  # q[i, l] = Q(chi_i)_l
    lhs = np.einsum("ijk,kl->ijl", F.fusion.astype(complex), q)
    rhs = q[:, None, :] * q[None, :, :]
    err = np.abs(lhs - rhs)
    worst = float(err.max())
    ok = worst <= tol
    where = None if ok else tuple(int(x) for x in np.unravel_index(np.argmax(err), err.shape))
    rep = Report("Q is an algebra map")
    rep.add(Check("q_homomorphism", ok, residual=worst, counterexample=where))
    return rep


def cross_check(M: ModularDatum, tol: float = DEFAULT_TOL, seed: int = 0) -> Report:
    """Match the S-matrix table against the eigenvalue table of the Verlinde ring."""
    F = verlinde_fusion(M)
    A = smatrix_chartable(M, F, tol)
    B = compute_character_table(F, tol=tol, seed=seed, exactify=False)
    m = match_character_tables(A, B, tol=tol, match_rows=False, use_sizes=False)
    rep = Report("modular cross-check")
    if m is None:
        diff = np.abs(A.table - B.table)
        raise MismatchError("no column permutation matches the two tables",
                            {"identity_residual": float(diff.max())})
    rep.add(Check("column_match", True, residual=m.residual, detail=f"permutation {list(m.columns)}"))
    rep.notes.append(f"permutation: {list(m.columns)}")
    return rep
