"""
Character tables of commutative semisimple fusion rings.

Columns of the table are the algebra maps rho_r: Gr(C) -> C, read off as the
simultaneous eigenvalues of the fusion matrices. Entry (i, r) is
<chi_i, g_r> = rho_r(chi_i). Class functions are stored as coefficient
vectors in the basis chi_0..chi_m and central elements in the basis e_0..e_m.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (CommutativityError, DegeneracyError, InconsistentTableError, ParseError,
                     SemisimplicityError, ValidationError)
from .fusion import (FusionRing, fusion_matrices, fusion_product,
                     grothendieck_semisimple, is_commutative, validate_fusion_ring)
from .reports import Check, Report
from .scalar import CycNumber, DEFAULT_MAX_RESAMPLE, DEFAULT_TOL, recognize, simuldiag
from .scalar.literals import parse_scalar, scalar_to_literal, to_complex

ROUND_DIGITS = 8
EXACT_CONDUCTORS = (1, 3, 4, 5, 8, 12)


@dataclass(frozen=True, eq=False)
class CharacterTable:
    table: np.ndarray
    class_sizes: np.ndarray
    ordering: tuple = ()
    tol: float = DEFAULT_TOL
    labels: tuple = ()
    exact: tuple | None = None

    def __post_init__(self):
        t = np.array(self.table, dtype=complex)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise InconsistentTableError(f"character table must be square, got {t.shape}")
        sizes = np.array(self.class_sizes, dtype=complex)
        if sizes.shape != (t.shape[0],):
            raise InconsistentTableError("class_sizes length must match the table")
        t.flags.writeable = False
        sizes.flags.writeable = False
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "class_sizes", sizes)
        if not self.ordering:
            object.__setattr__(self, "ordering", tuple(range(t.shape[0])))

    @property
    def rank(self) -> int:
        return self.table.shape[0]

    def to_dict(self) -> dict:
        out = {
            "table": [[_num(x) for x in row] for row in self.table],
            "class_sizes": [_num(x) for x in self.class_sizes],
            "ordering": list(self.ordering),
        }
        if self.labels:
            out["labels"] = list(self.labels)
        if self.exact is not None:
            out["exact"] = [[None if x is None else scalar_to_literal(x) for x in row]
                            for row in self.exact]
        return out

    @classmethod
    def from_dict(cls, obj: dict, tol: float = DEFAULT_TOL) -> CharacterTable:
        try:
            table = [[to_complex(parse_scalar(x)) for x in row] for row in obj["table"]]
            sizes = [to_complex(parse_scalar(x)) for x in obj["class_sizes"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"character-table JSON is missing field {exc}") from exc
        exact = None
        if obj.get("exact") is not None:
            exact = tuple(tuple(None if x is None else parse_scalar(x) for x in row)
                          for row in obj["exact"])
        return cls(np.array(table), np.array(sizes), tuple(obj.get("ordering", ())), tol,
                   tuple(obj.get("labels", ())), exact)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class"] + [f"C{r}" for r in range(self.rank)])
        w.writerow(["size"] + [_fmt(x) for x in self.class_sizes])
        for i, row in enumerate(self.table):
            w.writerow([self._label(i)] + [_fmt(x) for x in row])
        return buf.getvalue()

    def to_text(self) -> str:
        cells = [["", *(f"C{r}" for r in range(self.rank))],
                 ["|C|", *(_fmt(x) for x in self.class_sizes)]]
        for i, row in enumerate(self.table):
            cells.append([self._label(i), *(_fmt(x) for x in row)])
        widths = [max(len(c[k]) for c in cells) for k in range(len(cells[0]))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(line, widths)) for line in cells]
        return "\n".join(lines)

    def _label(self, i):
        return self.labels[i] if self.labels else f"chi{i}"


def _clean(z: complex) -> complex:
    re, im = z.real + 0.0, z.imag + 0.0
    return complex(re if re != 0 else 0.0, im if im != 0 else 0.0)


def _num(z):
    z = _clean(complex(z))
    return z.real if z.imag == 0 else [z.real, z.imag]


def _fmt(z) -> str:
    z = _clean(complex(z))
    re = round(z.real, 10) + 0.0
    im = round(z.imag, 10) + 0.0
    if im == 0:
        return f"{re:.10g}"
    return f"{re:.10g}{im:+.10g}i"


# -- computation ---------------------------------------------------------------


def _dims_and_dimension(F: FusionRing):
    d = F.dims_complex()
    dim_c = complex(sum(d[i] * d[F.dual[i]] for i in range(F.rank)))
    return d, dim_c


def _sizes(table: np.ndarray, F: FusionRing, dim_c: complex) -> np.ndarray:
    dual = list(F.dual)
    denom = np.einsum("ir,ir->r", table, table[dual, :])
    if np.any(np.abs(denom) <= DEFAULT_TOL):
        r = int(np.argmin(np.abs(denom)))
        raise InconsistentTableError(f"column {r} has vanishing codegree sum")
    return dim_c / denom


def _column_key(col: np.ndarray, size: complex):
    def rnd(x):
        return round(x, ROUND_DIGITS) + 0.0
    return (rnd(size.real), rnd(size.imag),
            tuple((rnd(z.real), rnd(z.imag)) for z in col[1:]))


def compute_character_table(F: FusionRing, tol: float = DEFAULT_TOL, seed: int = 0,
                            max_resample: int = DEFAULT_MAX_RESAMPLE,
                            exactify: bool = True) -> CharacterTable:
    """Character table of a validated commutative ring with nonzero trace form.

    The column equal to the dimension vector comes first; the rest are sorted
    by class size and then by their entries from row 1 down.
    """
    rep = validate_fusion_ring(F)
    if not rep.passed:
        raise ValidationError(f"invalid fusion ring: {', '.join(c.name for c in rep.failures)}", rep)
    if not is_commutative(F):
        raise CommutativityError("the fusion ring is not commutative")
    if not grothendieck_semisimple(F):
        raise SemisimplicityError("the Grothendieck algebra is not semisimple")
    n = F.rank
    mats = [M.astype(float) for M in fusion_matrices(F)]
    try:
        pairs = simuldiag(mats, tol=tol, max_resample=max_resample, seed=seed)
    except DegeneracyError as exc:
        raise SemisimplicityError(f"eigen-decomposition degenerate: {exc}") from exc
    raw = np.array([lams for _, lams in pairs], dtype=complex).T  # raw[i, c]

    if np.abs(raw[0] - 1).max() > tol * 10:
        raise InconsistentTableError("row 0 is not identically 1")
    d, dim_c = _dims_and_dimension(F)
    dist = np.abs(raw - d[:, None]).max(axis=0)
    first = int(np.argmin(dist))
    if dist[first] > math.sqrt(tol) * max(1.0, np.abs(d).max()):
        raise InconsistentTableError("dims vector is not a column of the character table")

    # drop rounding noise below tol in either component
    raw.real[np.abs(raw.real) < tol] = 0.0
    raw.imag[np.abs(raw.imag) < tol] = 0.0
    raw[0, :] = 1.0
    raw[:, first] = d
    sizes = _sizes(raw, F, dim_c)
    rest = sorted((c for c in range(n) if c != first),
                  key=lambda c: _column_key(raw[:, c], sizes[c]))
    order = (first, *rest)
    table = raw[:, order]
    T = CharacterTable(table, sizes[list(order)], order, tol, F.labels)
    if exactify:
        T = CharacterTable(T.table, T.class_sizes, T.ordering, tol, T.labels,
                           exact_entries(T, F, tol))
    return T


def class_sizes(T: CharacterTable, F: FusionRing) -> np.ndarray:
    """|C_r| = dim(C) / sum_i <chi_i, g_r><chi_i*, g_r>."""
    _, dim_c = _dims_and_dimension(F)
    return _sizes(T.table, F, dim_c)


def idempotents(T: CharacterTable, F: FusionRing) -> list[np.ndarray]:
    """f_r = (|C_r| / dim C) sum_i <chi_i*, g_r> chi_i, as CF coefficient vectors."""
    _, dim_c = _dims_and_dimension(F)
    dual = list(F.dual)
    return [T.class_sizes[r] / dim_c * T.table[dual, r] for r in range(T.rank)]


def _scale(*arrays) -> float:
    return max(1.0, *(float(np.abs(a).max(initial=0.0)) for a in arrays))


def verify_idempotents(T: CharacterTable, F: FusionRing, tol: float = DEFAULT_TOL) -> Report:
    n = T.rank
    fs = idempotents(T, F)
    rep = Report("class idempotents")
    worst, where = 0.0, None
    for r in range(n):
        for s in range(n):
            prod = fusion_product(F, fs[r], fs[s])
            target = fs[r] if r == s else np.zeros(n)
            err = float(np.abs(prod - target).max())
            if err > worst:
                worst, where = err, (r, s)
    rep.add(Check("orthogonal_idempotents", worst <= tol * _scale(*fs),
                  residual=worst, counterexample=where if worst > tol * _scale(*fs) else None))
    total = sum(fs)
    unit = np.zeros(n)
    unit[0] = 1
    err = float(np.abs(total - unit).max())
    rep.add(Check("sum_is_unit", err <= tol * _scale(*fs), residual=err))
    worst, where = 0.0, None
    for i in range(n):
        chi = np.zeros(n)
        chi[i] = 1
        for r in range(n):
            err = float(np.abs(fusion_product(F, chi, fs[r]) - T.table[i, r] * fs[r]).max())
            if err > worst:
                worst, where = err, (i, r)
    ok = worst <= tol * _scale(T.table, *fs)
    rep.add(Check("eigen_relation", ok, residual=worst, counterexample=None if ok else where))
    return rep


def verify_orthogonality(T: CharacterTable, F: FusionRing, tol: float = DEFAULT_TOL) -> Report:
    """First and second orthogonality relations and chi_i = sum_r <chi_i, g_r> f_r.

    Uses the class sizes stored on the table, so a corrupted entry is not
    silently compensated.
    """
    n = T.rank
    _, dim_c = _dims_and_dimension(F)
    dual = list(F.dual)
    t = T.table
    w = T.class_sizes / dim_c
    eye = np.eye(n)
    rep = Report("orthogonality")

    first = np.einsum("r,ir,jr->ij", w, t, t[dual, :])
    rep.add(_matrix_check("first_orthogonality", first, eye, tol, _scale(t)))
    second = np.einsum("r,ir,is->rs", w, t, t[dual, :])
    rep.add(_matrix_check("second_orthogonality", second, eye, tol, _scale(t)))
    fs = np.array(idempotents(T, F))  # fs[r, k]
    rebuilt = np.einsum("ir,rk->ik", t, fs)
    rep.add(_matrix_check("change_of_basis", rebuilt, eye, tol, _scale(t)))
    return rep


def _matrix_check(name, got, want, tol, scale) -> Check:
    err = np.abs(got - want)
    worst = float(err.max(initial=0.0))
    ok = worst <= tol * scale
    where = None if ok else tuple(int(x) for x in np.unravel_index(np.argmax(err), err.shape))
    return Check(name, ok, residual=worst, counterexample=where)


@dataclass
class CanonicalElements:
    integral: np.ndarray
    cointegral: np.ndarray
    class_averages: list = field(default_factory=list)
    class_sums: list = field(default_factory=list)


def canonical_elements(T: CharacterTable, F: FusionRing) -> CanonicalElements:
    """Integral e_0, cointegral (d_i*/dim C)_i and the class elements.

    ``class_sums[r]`` is the inverse Fourier image of f_r, namely
    sum_i a_ir (dim C / d_i) e_i*, and ``class_averages[r]`` = g_r is that
    divided by |C_r|.
    """
    n = T.rank
    d, dim_c = _dims_and_dimension(F)
    integral = np.zeros(n, dtype=complex)
    integral[0] = 1
    cointegral = np.array([d[F.dual[i]] / dim_c for i in range(n)])
    sums, avgs = [], []
    for r, a in enumerate(idempotents(T, F)):
        s = np.zeros(n, dtype=complex)
        for i in range(n):
            s[F.dual[i]] += a[i] * dim_c / d[i]
        sums.append(s)
        avgs.append(s / T.class_sizes[r])
    return CanonicalElements(integral, cointegral, avgs, sums)


def pairing(F: FusionRing, f: np.ndarray, a: np.ndarray) -> complex:
    """<f, a> for f in CF and a in CE, using <chi_i, e_j> = d_j delta_ij."""
    return complex(np.sum(np.asarray(f) * np.asarray(a) * F.dims_complex()))


def fourier_inverse(F: FusionRing, f: np.ndarray) -> np.ndarray:
    """Inverse Fourier transform CF -> CE: chi_i -> (dim C / d_i) e_i*."""
    d, dim_c = _dims_and_dimension(F)
    out = np.zeros(F.rank, dtype=complex)
    for i, c in enumerate(f):
        out[F.dual[i]] += c * dim_c / d[i]
    return out


def fourier(F: FusionRing, a: np.ndarray) -> np.ndarray:
    """Fourier transform CE -> CF: e_i -> (d_i / dim C) chi_i*."""
    d, dim_c = _dims_and_dimension(F)
    out = np.zeros(F.rank, dtype=complex)
    for i, c in enumerate(a):
        out[F.dual[i]] += c * d[i] / dim_c
    return out


# -- integrality and exact recognition ------------------------------------------


def charpoly(M) -> list[int]:
    """Monic characteristic polynomial of an integer matrix, highest degree first."""
    from fractions import Fraction

    A = [[Fraction(int(x)) for x in row] for row in np.asarray(M)]
    n = len(A)
    coeffs = [Fraction(1)]
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k
        prev = [[Mk[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(A[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(Mk[i][i] for i in range(n)) / k)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("characteristic polynomial of an integer matrix is not integral")
    return [int(c) for c in coeffs]


def _horner(coeffs, x):
    acc = x * 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def integrality_check(T: CharacterTable, F: FusionRing, tol: float = DEFAULT_TOL) -> Report:
    """Every entry of row i is a root of the integer characteristic polynomial of N_i."""
    rep = Report("integrality")
    worst_all = 0.0
    for i, M in enumerate(fusion_matrices(F)):
        p = charpoly(M)
        res = [abs(_horner(p, complex(z))) for z in T.table[i]]
        worst = max(res)
        worst_all = max(worst_all, worst)
        ok = worst <= tol
        where = None if ok else (i, int(np.argmax(res)))
        rep.add(Check(f"row_{i}", ok, residual=worst, counterexample=where,
                      detail=f"charpoly {p}"))
    rep.notes.append("cyclotomicity of entries: assumed, not verified")
    return rep


def exact_candidates(F: FusionRing) -> tuple[int, ...]:
    n = 1
    for d in F.dims:
        if isinstance(d, CycNumber):
            n = math.lcm(n, d.conductor)
    return tuple(sorted(set(EXACT_CONDUCTORS) | {n}))


def exact_entries(T: CharacterTable, F: FusionRing, tol: float = DEFAULT_TOL) -> tuple:
    """Small-height cyclotomic numbers matching the float entries, verified exactly.

    A candidate is kept only if it is an exact root of the row's characteristic
    polynomial; otherwise the slot is None.
    """
    conductors = exact_candidates(F)
    polys = [charpoly(M) for M in fusion_matrices(F)]
    rows = []
    for i in range(T.rank):
        row = []
        for r in range(T.rank):
            z = complex(T.table[i, r])
            found = None
            for N in conductors:
                c = recognize(z, N, tol=max(tol, 1e-9) * 100)
                if c is not None and _horner(polys[i], c).is_zero():
                    found = c
                    break
            row.append(found)
        rows.append(tuple(row))
    return tuple(rows)


# -- table comparison -------------------------------------------------------------


@dataclass
class TableMatch:
    columns: tuple
    rows: tuple
    residual: float


def _bipartite(ok: np.ndarray):
    """Perfect matching of rows to columns of a boolean matrix, or None."""
    n = ok.shape[0]
    match_col = [-1] * ok.shape[1]

    def augment(i, seen):
        for j in np.nonzero(ok[i])[0]:
            if not seen[j]:
                seen[j] = True
                if match_col[j] < 0 or augment(match_col[j], seen):
                    match_col[j] = i
                    return True
        return False

    for i in range(n):
        if not augment(i, [False] * ok.shape[1]):
            return None
    out = [0] * n
    for j, i in enumerate(match_col):
        if i >= 0:
            out[i] = j
    return out


def match_character_tables(A: CharacterTable, B: CharacterTable, tol: float = 1e-8,
                           match_rows: bool = True, use_sizes: bool = True) -> TableMatch | None:
    """Find permutations with A[i, r] ~ B[rows[i], columns[r]] within tol.

    Column 0 must map to column 0. Candidate columns must have equal class
    sizes when ``use_sizes`` is set. Without ``match_rows`` the row order is
    taken as fixed.
    """
    a, b = A.table, B.table
    n = a.shape[0]
    if b.shape != a.shape:
        return None
    scale = _scale(a, b)
    size_ok = np.ones((n, n), dtype=bool)
    if use_sizes:
        size_ok = np.abs(A.class_sizes[:, None] - B.class_sizes[None, :]) <= tol * _scale(
            A.class_sizes, B.class_sizes)

    cols: list[int] = []

    def rows_ok(depth):
        if not match_rows:
            diff = np.abs(a[:, depth - 1] - b[:, cols[depth - 1]])
            return diff.max() <= tol * scale
        sub_a = a[:, :depth]
        sub_b = b[:, cols]
        close = (np.abs(sub_a[:, None, :] - sub_b[None, :, :]) <= tol * scale).all(axis=2)
        return _bipartite(close) is not None

    def search(r):
        if r == n:
            return True
        for c in ([0] if r == 0 else range(1, n)):
            if c in cols or not size_ok[r, c]:
                continue
            cols.append(c)
            if rows_ok(r + 1) and search(r + 1):
                return True
            cols.pop()
        return False

    if not search(0):
        return None
    sub_b = b[:, cols]
    if match_rows:
        close = (np.abs(a[:, None, :] - sub_b[None, :, :]) <= tol * scale).all(axis=2)
        rows = _bipartite(close)
    else:
        rows = list(range(n))
    residual = float(np.abs(a - sub_b[rows, :]).max())
    return TableMatch(tuple(cols), tuple(rows), residual)
