"""
Exact Gaussian elimination over any field whose elements support
``+ - * /`` and truthiness (nonzero). Used with :class:`fractions.Fraction`,
:class:`~fusionchar.scalar.cyclotomic.CycNumber` and
:class:`~fusionchar.scalar.primefield.PrimeFieldElem`.

Rows are reduced one at a time into a sparse reduced row echelon form, which
keeps the cost proportional to the number of nonzeros for the very sparse
systems produced by structure constants.
"""
from __future__ import annotations

from fractions import Fraction


def _zero_one(sample):
    zero = sample - sample
    return zero, zero + 1


class RowReducer:
    """Incrementally maintained reduced row echelon form.

    ``pivots`` maps a pivot column to its row (a dict col -> value with a 1
    at the pivot). Every stored row is zero in every other pivot column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, object]) -> dict[int, object]:
        row = {c: v for c, v in row.items() if v}
        for col in sorted(c for c in row if c in self.pivots):
            v = row.get(col)
            if not v:
                continue
            for c, pv in self.pivots[col].items():
                nv = row.get(c, 0) - v * pv if c in row else -v * pv
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row) -> bool:
        """Add a row (dense sequence or sparse dict). Returns True if rank grew."""
        if not isinstance(row, dict):
            row = {c: v for c, v in enumerate(row) if v}
        row = self.reduce(row)
        if not row:
            return False
        col = min(row)
        inv = 1 / row[col] if not isinstance(row[col], int) else Fraction(1, row[col])
        row = {c: v * inv for c, v in row.items()}
        # clear the new pivot column from existing rows
        for prow in self.pivots.values():
            v = prow.get(col)
            if v:
                for c, nv in row.items():
                    w = prow.get(c, 0) - v * nv if c in prow else -v * nv
                    if w:
                        prow[c] = w
                    else:
                        prow.pop(c, None)
        self.pivots[col] = row
        return True

    def kernel(self, zero, one) -> list[list]:
        """Basis of the right null space of the rows added so far."""
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for pc, prow in self.pivots.items():
                x = prow.get(f)
                if x:
                    v[pc] = -x
            basis.append(v)
        return basis


def kernel_basis(rows, ncols: int | None = None, zero=None, one=None) -> list[list]:
    """Exact basis of {v : M v = 0} for the matrix with the given rows.

    ``ncols`` is required when there are no rows. ``zero``/``one`` are taken
    from the entries when omitted; pass them when M may be empty or all-int.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0]) if not isinstance(rows[0], dict) else None
        if ncols is None:
            raise ValueError("ncols is required for sparse rows")
    if zero is None:
        sample = _first_entry(rows)
        zero, one = _zero_one(sample) if sample is not None else (Fraction(0), Fraction(1))
    red = RowReducer(ncols)
    for r in rows:
        red.add(r)
    return red.kernel(zero, one)


def _first_entry(rows):
    for r in rows:
        vals = r.values() if isinstance(r, dict) else r
        for v in vals:
            return v
    return None


def rank(rows, ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    red = RowReducer(ncols if ncols is not None else len(rows[0]))
    for r in rows:
        red.add(r)
    return red.rank


def solve(mat, rhs):
    """Unique solution of mat x = rhs; raises ValueError if singular or inconsistent."""
    n = len(mat)
    ncols = len(mat[0])
    red = RowReducer(ncols + 1)
    for r, b in zip(mat, rhs):
        red.add(list(r) + [b])
    if ncols in red.pivots:
        raise ValueError("inconsistent linear system")
    if red.rank != ncols:
        raise ValueError("singular linear system")
    zero, _ = _zero_one(_first_entry(mat)) if n else (Fraction(0), Fraction(1))
    x = [zero] * ncols
    for pc, prow in red.pivots.items():
        x[pc] = prow.get(ncols, zero)
    return x


def inverse(mat):
    n = len(mat)
    zero, one = _zero_one(mat[0][0])
    red = RowReducer(2 * n)
    for i, r in enumerate(mat):
        red.add(list(r) + [one if j == i else zero for j in range(n)])
    if any(c not in red.pivots for c in range(n)):
        raise ValueError("matrix is not invertible")
    return [[red.pivots[i].get(n + j, zero) for j in range(n)] for i in range(n)]


def matmul(a, b):
    zero, _ = _zero_one(a[0][0])
    m = len(b[0])
    out = []
    for row in a:
        acc = [zero] * m
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a, v):
    zero, _ = _zero_one(a[0][0])
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def span_contains(basis, vectors) -> bool:
    """True if every vector lies in the span of ``basis``."""
    if not vectors:
        return True
    ncols = len(vectors[0])
    red = RowReducer(ncols)
    for b in basis:
        red.add(b)
    return all(not red.reduce({c: v for c, v in enumerate(x) if v}) for x in vectors)


def same_span(a, b) -> bool:
    return span_contains(a, b) and span_contains(b, a)


def intersect_spans(a, b, ncols: int, zero, one) -> list[list]:
    """Basis of span(a) ∩ span(b) via the kernel of [A^T | -B^T]."""
    if not a or not b:
        return []
    cols = [list(x) for x in a] + [[-y for y in x] for x in b]
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(ncols)]
    ker = kernel_basis(rows, len(cols), zero, one)
    out = RowReducer(ncols)
    result = []
    for k in ker:
        v = [zero] * ncols
        for j in range(len(a)):
            if k[j]:
                v = [vi + k[j] * aj for vi, aj in zip(v, a[j])]
        if out.add(v):
            result.append(v)
    return result


def determinant(mat):
    """Exact determinant by Gaussian elimination."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in mat]
    det = m[0][0] - m[0][0] + 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return det - det
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] * inv
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det
