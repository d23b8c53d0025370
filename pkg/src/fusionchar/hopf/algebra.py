"""
Finite-dimensional Hopf algebras given by structure constants.

Elements are sparse dicts ``{basis index: scalar}``; elements of H (x) H are
dicts keyed by index pairs. ``mult[i][j]`` is the product b_i b_j,
``comult[i]`` is Delta(b_i) and ``antipode[i]`` the coefficient row of S(b_i).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..errors import ParseError, StructureError
from ..fusion import _read_json
from ..reports import Check, Report
from ..scalar import inverse as mat_inverse
from ..scalar.fields import field_from_json


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _axpy(acc: dict, c, x: dict):
    """acc += c * x in place."""
    for k, v in x.items():
        nv = acc.get(k, 0) + c * v if k in acc else c * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


@dataclass(frozen=True, eq=False)
class HModule:
    """Left module: ``action[i]`` is the d x d matrix of b_i acting on columns."""

    dim: int
    action: tuple
    label: str = ""
    simple: bool = False

    def __post_init__(self):
        action = tuple(tuple(tuple(r) for r in M) for M in self.action)
        for M in action:
            if len(M) != self.dim or any(len(r) != self.dim for r in M):
                raise StructureError(f"module action matrices must be {self.dim} x {self.dim}")
        object.__setattr__(self, "action", action)


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    dim: int
    field: object
    mult: tuple
    unit: tuple
    comult: tuple
    counit: tuple
    antipode: tuple
    pivotal: tuple | None = None
    modules: tuple = ()
    name: str = ""
    basis_labels: tuple = field(default=())

    def __post_init__(self):
        n, F = self.dim, self.field
        if n < 1:
            raise StructureError("dimension must be positive")
        if len(self.mult) != n or any(len(row) != n for row in self.mult):
            raise StructureError(f"mult must be an {n} x {n} table")
        mult = tuple(tuple(_clean({int(k): F(v) for k, v in d.items()}) for d in row)
                     for row in self.mult)
        comult = tuple(_clean({(int(j), int(k)): F(v) for (j, k), v in d.items()})
                       for d in self.comult)
        if len(comult) != n:
            raise StructureError(f"comult must have {n} entries")
        for row in mult:
            for d in row:
                if any(not 0 <= k < n for k in d):
                    raise StructureError("mult index out of range")
        for d in comult:
            if any(not (0 <= j < n and 0 <= k < n) for j, k in d):
                raise StructureError("comult index out of range")
        for name in ("unit", "counit"):
            if len(getattr(self, name)) != n:
                raise StructureError(f"{name} must have length {n}")
        if len(self.antipode) != n or any(len(r) != n for r in self.antipode):
            raise StructureError(f"antipode must be {n} x {n}")
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "comult", comult)
        object.__setattr__(self, "unit", tuple(F(x) for x in self.unit))
        object.__setattr__(self, "counit", tuple(F(x) for x in self.counit))
        object.__setattr__(self, "antipode", tuple(tuple(F(x) for x in r) for r in self.antipode))
        if self.pivotal is not None:
            if len(self.pivotal) != n:
                raise StructureError(f"pivotal must have length {n}")
            object.__setattr__(self, "pivotal", tuple(F(x) for x in self.pivotal))
        mods = []
        for X in self.modules:
            if len(X.action) != n:
                raise StructureError("module needs one action matrix per basis element")
            mods.append(HModule(X.dim, tuple(tuple(tuple(F(x) for x in r) for r in M)
                                             for M in X.action), X.label, X.simple))
        object.__setattr__(self, "modules", tuple(mods))

    # -- scalars and vectors ---------------------------------------------------

    @property
    def zero(self):
        return self.field.zero

    @property
    def one(self):
        return self.field.one

    def basis(self, i: int) -> dict:
        return {i: self.one}

    def unit_vec(self) -> dict:
        return _clean(dict(enumerate(self.unit)))

    def dense(self, x: dict) -> list:
        return [x.get(i, self.zero) for i in range(self.dim)]

    def sparse(self, v) -> dict:
        return _clean({i: self.field(c) for i, c in enumerate(v)})

    # -- structure maps --------------------------------------------------------

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            row = self.mult[i]
            for j, b in y.items():
                _axpy(out, a * b, row[j])
        return out

    def mul3(self, x: dict, y: dict, z: dict) -> dict:
        return self.mul(self.mul(x, y), z)

    def comul(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            _axpy(out, a, self.comult[i])
        return out

    def eps(self, x: dict):
        acc = self.zero
        for i, a in x.items():
            if self.counit[i]:
                acc = acc + a * self.counit[i]
        return acc

    def S(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            _axpy(out, a, dict(enumerate(self.antipode[i])))
        return out

    @cached_property
    def _s2_rows(self):
        return tuple(self.dense(self.S(self.S(self.basis(i)))) for i in range(self.dim))

    def S2(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            _axpy(out, a, dict(enumerate(self._s2_rows[i])))
        return out

    @cached_property
    def _sinv_rows(self):
        try:
            inv = mat_inverse([list(r) for r in self.antipode])
        except ValueError as exc:
            raise StructureError("antipode is not invertible") from exc
        return tuple(tuple(r) for r in inv)

    def Sinv(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            _axpy(out, a, dict(enumerate(self._sinv_rows[i])))
        return out

    def tensor_mul(self, X: dict, Y: dict) -> dict:
        """Product in H (x) H."""
        out: dict = {}
        for (a, b), c in X.items():
            for (p, q), d in Y.items():
                left = self.mult[a][p]
                right = self.mult[b][q]
                cd = c * d
                for u, s in left.items():
                    for v, t in right.items():
                        key = (u, v)
                        nv = out.get(key, 0) + cd * s * t if key in out else cd * s * t
                        if nv:
                            out[key] = nv
                        else:
                            out.pop(key, None)
        return out

    def pair(self, f, x: dict):
        """<f, x> for a linear form given as a dense coefficient list."""
        acc = self.zero
        for i, a in x.items():
            if f[i]:
                acc = acc + f[i] * a
        return acc

    def is_commutative(self) -> bool:
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    # -- serialization -----------------------------------------------------------

    def to_dict(self) -> dict:
        lit = self.field.to_literal
        out = {
            "dim": self.dim,
            "field": self.field.to_json(),
            "mult": [[i, j, k, lit(c)] for i in range(self.dim) for j in range(self.dim)
                     for k, c in sorted(self.mult[i][j].items())],
            "unit": [lit(c) for c in self.unit],
            "comult": [[i, j, k, lit(c)] for i in range(self.dim)
                       for (j, k), c in sorted(self.comult[i].items())],
            "counit": [lit(c) for c in self.counit],
            "antipode": [[lit(c) for c in r] for r in self.antipode],
        }
        if self.name:
            out["name"] = self.name
        if self.basis_labels:
            out["basis"] = list(self.basis_labels)
        if self.pivotal is not None:
            out["pivotal"] = [lit(c) for c in self.pivotal]
        if self.modules:
            out["modules"] = [
                {"dim": X.dim, "label": X.label, "simple": X.simple,
                 "action": [[[lit(c) for c in r] for r in M] for M in X.action]}
                for X in self.modules]
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> HopfAlgebra:
        try:
            n = int(obj["dim"])
            F = field_from_json(obj["field"])
            P = F.parse
            mult = [[{} for _ in range(n)] for _ in range(n)]
            for i, j, k, c in obj["mult"]:
                _check_idx(n, i, j, k)
                mult[i][j][k] = mult[i][j].get(k, F.zero) + P(c)
            comult = [{} for _ in range(n)]
            for i, j, k, c in obj["comult"]:
                _check_idx(n, i, j, k)
                comult[i][(j, k)] = comult[i].get((j, k), F.zero) + P(c)
            unit = [P(c) for c in obj["unit"]]
            counit = [P(c) for c in obj["counit"]]
            antipode = [[P(c) for c in r] for r in obj["antipode"]]
            pivotal = [P(c) for c in obj["pivotal"]] if obj.get("pivotal") is not None else None
            modules = tuple(
                HModule(int(m["dim"]), [[[P(c) for c in r] for r in M] for M in m["action"]],
                        m.get("label", ""), bool(m.get("simple", False)))
                for m in obj.get("modules", ()))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"Hopf-algebra JSON is missing or has malformed field: {exc}") from exc
        except ValueError as exc:
            if isinstance(exc, (ParseError, StructureError)):
                raise
            raise ParseError(f"Hopf-algebra JSON has malformed field: {exc}") from exc
        return cls(n, F, mult, unit, comult, counit, antipode, pivotal, modules,
                   obj.get("name", ""), tuple(obj.get("basis", ())))


def _check_idx(n, *idx):
    for x in idx:
        if not isinstance(x, int) or not 0 <= x < n:
            raise StructureError(f"basis index {x!r} out of range for dimension {n}")


def load_hopf(path) -> HopfAlgebra:
    return HopfAlgebra.from_dict(_read_json(path))


# -- validation -------------------------------------------------------------------


def validate_hopf(H: HopfAlgebra) -> Report:
    """Check every Hopf-algebra axiom exactly; counterexamples are basis indices."""
    n = H.dim
    rep = Report(f"Hopf algebra axioms{' for ' + H.name if H.name else ''}")
    e = H.basis
    one = H.unit_vec()

    bad = None
    for i in range(n):
        for j in range(n):
            ij = H.mult[i][j]
            for k in range(n):
                if H.mul(ij, e(k)) != H.mul(e(i), H.mult[j][k]):
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add(Check("associativity", bad is None, counterexample=bad))

    bad = next(((i,) for i in range(n)
                if H.mul(one, e(i)) != e(i) or H.mul(e(i), one) != e(i)), None)
    rep.add(Check("unit", bad is None, counterexample=bad))

    bad = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H.comult[i].items():
            for (a, b), d in H.comult[j].items():
                _axpy(left, c * d, {(a, b, k): H.one})
            for (a, b), d in H.comult[k].items():
                _axpy(right, c * d, {(j, a, b): H.one})
        if left != right:
            bad = (i,)
            break
    rep.add(Check("coassociativity", bad is None, counterexample=bad))

    bad = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H.comult[i].items():
            _axpy(left, c * H.counit[j], e(k))
            _axpy(right, c * H.counit[k], e(j))
        if left != e(i) or right != e(i):
            bad = (i,)
            break
    rep.add(Check("counit", bad is None, counterexample=bad))

    bad = None
    for i in range(n):
        for j in range(n):
            lhs = H.comul(H.mult[i][j])
            if lhs != H.tensor_mul(H.comult[i], H.comult[j]):
                bad = (i, j)
                break
        if bad:
            break
    rep.add(Check("comult_multiplicative", bad is None, counterexample=bad))
    unit_ok = H.comul(one) == {(a, b): c * d for a, c in one.items() for b, d in one.items()
                               if c * d}
    rep.add(Check("comult_unital", unit_ok))

    bad = next(((i, j) for i in range(n) for j in range(n)
                if H.eps(H.mult[i][j]) != H.counit[i] * H.counit[j]), None)
    rep.add(Check("counit_multiplicative", bad is None, counterexample=bad))
    rep.add(Check("counit_unital", H.eps(one) == H.one))

    bad = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H.comult[i].items():
            _axpy(left, c, H.mul(H.S(e(j)), e(k)))
            _axpy(right, c, H.mul(e(j), H.S(e(k))))
        target = _axpy({}, H.counit[i], one)
        if left != target or right != target:
            bad = (i,)
            break
    rep.add(Check("antipode", bad is None, counterexample=bad))

    if H.pivotal is not None:
        rep.add(pivotal_check(H, H.sparse(H.pivotal)))
    for m, X in enumerate(H.modules):
        c = module_check(H, X)
        c.name = f"module_{m}"
        rep.add(c)
    return rep


def pivotal_check(H: HopfAlgebra, g: dict) -> Check:
    """g grouplike and S^2(h) g = g h for every basis element h."""
    gg = {(a, b): c * d for a, c in g.items() for b, d in g.items() if c * d}
    if H.comul(g) != gg:
        return Check("pivotal", False, detail="Delta(g) != g (x) g")
    if H.eps(g) != H.one:
        return Check("pivotal", False, detail="eps(g) != 1")
    for i in range(H.dim):
        if H.mul(H.S2(H.basis(i)), g) != H.mul(g, H.basis(i)):
            return Check("pivotal", False, counterexample=(i,), detail="S^2(b_i) g != g b_i")
    return Check("pivotal", True)


def _matmul(A, B, zero):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = [[zero] * p for _ in range(n)]
    for i in range(n):
        for k in range(m):
            a = A[i][k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(p):
                    if Bk[j]:
                        row[j] = row[j] + a * Bk[j]
    return out


def module_matrix(H: HopfAlgebra, X: HModule, x: dict):
    """Matrix of the element x acting on X."""
    d = X.dim
    out = [[H.zero] * d for _ in range(d)]
    for i, a in x.items():
        M = X.action[i]
        for r in range(d):
            for c in range(d):
                if M[r][c]:
                    out[r][c] = out[r][c] + a * M[r][c]
    return out


def module_check(H: HopfAlgebra, X: HModule) -> Check:
    """rho(b_i) rho(b_j) = rho(b_i b_j) and rho(1) = identity."""
    d = X.dim
    ident = [[H.one if r == c else H.zero for c in range(d)] for r in range(d)]
    if module_matrix(H, X, H.unit_vec()) != ident:
        return Check("module", False, detail="unit does not act as identity")
    for i in range(H.dim):
        for j in range(H.dim):
            if _matmul(X.action[i], X.action[j], H.zero) != module_matrix(H, X, H.mult[i][j]):
                return Check("module", False, counterexample=(i, j))
    return Check("module", True)
