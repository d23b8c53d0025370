"""
Class functions, integrals, cointegrals, characters and the Fourier transform
of a finite-dimensional Hopf algebra. Everything here is exact.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from ..errors import NormalizationError, UnimodularityError
from ..reports import Check, Report
from ..scalar import kernel_basis, rank
from ..scalar.fields import PrimeField
from ..scalar.linalg import intersect_spans, same_span, span_contains
from .algebra import HModule, HopfAlgebra, _axpy, _matmul, module_check, module_matrix, pivotal_check


def _kernel(H: HopfAlgebra, rows) -> list[list]:
    rows = [r for r in rows if r]
    return kernel_basis(rows, H.dim, H.zero, H.one)


def class_functions(H: HopfAlgebra) -> list[list]:
    """Basis of {f : f(b_i b_j) = f(b_j S^2(b_i)) for all i, j}."""
    rows = []
    for i in range(H.dim):
        s2 = H.S2(H.basis(i))
        for j in range(H.dim):
            rows.append(_axpy(dict(H.mult[i][j]), -H.one, H.mul(H.basis(j), s2)))
    return _kernel(H, rows)


def _center_rows(H: HopfAlgebra):
    n = H.dim
    rows = []
    for i in range(n):
        for k in range(n):
            row = {}
            for t in range(n):
                c = H.mult[i][t].get(k, H.zero) - H.mult[t][i].get(k, H.zero)
                if c:
                    row[t] = c
            rows.append(row)
    return rows


def center(H: HopfAlgebra) -> list[list]:
    """Basis of {a : b_i a = a b_i for all i}."""
    return _kernel(H, _center_rows(H))


def _integral_rows(H: HopfAlgebra, left: bool):
    n = H.dim
    rows = []
    for i in range(n):
        for k in range(n):
            row = {}
            for t in range(n):
                prod = H.mult[i][t] if left else H.mult[t][i]
                c = prod.get(k, H.zero) - (H.counit[i] if t == k else H.zero)
                if c:
                    row[t] = c
            rows.append(row)
    return rows


@dataclass
class Integrals:
    left: list
    right: list
    categorical: list
    unimodular_algebra: bool
    unimodular_category: bool


def integrals(H: HopfAlgebra) -> Integrals:
    """Left, right and central left integrals of H."""
    left = _kernel(H, _integral_rows(H, True))
    right = _kernel(H, _integral_rows(H, False))
    categorical = _kernel(H, _integral_rows(H, True) + _center_rows(H))
    return Integrals(left, right, categorical, same_span(left, right), bool(categorical))


def convolution(H: HopfAlgebra, f, g) -> list:
    """(f * g)(b_i) = sum Delta_i^{jk} f(b_j) g(b_k)."""
    out = []
    for i in range(H.dim):
        acc = H.zero
        for (j, k), c in H.comult[i].items():
            if f[j] and g[k]:
                acc = acc + c * f[j] * g[k]
        out.append(acc)
    return out


def _right_cointegral_rows(H: HopfAlgebra):
    # lam(a_(1)) a_(2) - lam(a) 1 = 0 for a = b_i, one row per output coordinate t
    n = H.dim
    rows = []
    for i in range(n):
        per_t: dict = {}
        for (j, k), c in H.comult[i].items():
            per_t.setdefault(k, {})
            _axpy(per_t[k], c, {j: H.one})
        for t in range(n):
            row = dict(per_t.get(t, {}))
            if H.unit[t]:
                _axpy(row, -H.unit[t], {i: H.one})
            rows.append(row)
    return rows


def _ad_invariance_rows(H: HopfAlgebra):
    # lam(h_(1) a S(h_(2))) - eps(h) lam(a) = 0 for h = b_i, a = b_t
    n = H.dim
    rows = []
    images = [H.S(H.basis(k)) for k in range(n)]
    for i in range(n):
        for t in range(n):
            row: dict = {}
            for (j, k), c in H.comult[i].items():
                _axpy(row, c, H.mul(H.mult[j][t], images[k]))
            if H.counit[i]:
                _axpy(row, -H.counit[i], {t: H.one})
            rows.append(row)
    return rows


@dataclass
class Cointegrals:
    right_cointegrals: list
    ad_invariant: list
    categorical: list


def cointegrals(H: HopfAlgebra) -> Cointegrals:
    """Right cointegrals, ad-invariant forms and their intersection."""
    rc = _right_cointegral_rows(H)
    ad = _ad_invariance_rows(H)
    return Cointegrals(_kernel(H, rc), _kernel(H, ad), _kernel(H, rc + ad))


# -- grouplikes and pivotal elements ------------------------------------------------


def is_grouplike(H: HopfAlgebra, g: dict) -> bool:
    gg = {(a, b): c * d for a, c in g.items() for b, d in g.items() if c * d}
    return H.comul(g) == gg and H.eps(g) == H.one


def _numeric_grouplike_candidates(H: HopfAlgebra, seed: int, tries: int = 3):
    """Float solutions of Delta(g) = g (x) g, eps(g) = 1.

    Starting points are eigenvectors of random combinations of the right-hit
    operators v -> (delta^j (x) id) Delta(v), whose common eigenvectors are
    the grouplikes. Each start is polished by Gauss-Newton on the quadratic
    system, whose Jacobian is injective at a grouplike in characteristic 0.
    """
    n = H.dim
    to_c = H.field.to_complex
    D = np.zeros((n, n, n), dtype=complex)  # D[j, k, i] = Delta_i^{jk}
    for i in range(n):
        for (j, k), c in H.comult[i].items():
            D[j, k, i] = to_c(c)
    eps = np.array([to_c(c) for c in H.counit])
    Dflat = D.reshape(n * n, n)
    eye = np.eye(n)
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(tries):
        t = rng.integers(1, 2 ** 20, size=n) / 2 ** 20
        C = np.einsum("j,jki->ki", t, D)
        t2 = rng.integers(1, 2 ** 20, size=n) / 2 ** 20
        C2 = np.einsum("j,jki->ki", t2, D)
        seen: list = []
        for lam in np.linalg.eigvals(C):
            if any(abs(lam - s) < 1e-3 for s in seen):
                continue
            seen.append(lam)
            _, sv, vh = np.linalg.svd(C - lam * eye)
            null = vh[sv < 1e-3 * max(1.0, sv[0])].conj().T
            if null.shape[1] == 0:
                null = vh[-1:].conj().T
            starts = list(null.T)
            if null.shape[1] > 1:
                # split a repeated eigenvalue with a second combination
                _, cs = np.linalg.eig(null.conj().T @ C2 @ null)
                starts += list((null @ cs).T)
            for v in starts:
                g = _polish_grouplike(v, Dflat, eps, eye)
                if g is not None:
                    out.append(g)
    return out


def _polish_grouplike(v, Dflat, eps, eye):
    e = eps @ v
    if abs(e) < 1e-8:
        return None
    g = v / e
    for _ in range(30):
        res = np.concatenate([Dflat @ g - np.kron(g, g), [eps @ g - 1]])
        if np.abs(res).max() < 1e-13:
            break
        J = np.vstack([Dflat - np.kron(g[:, None], eye) - np.kron(eye, g[:, None]), eps])
        g = g - np.linalg.lstsq(J, res, rcond=None)[0]
    ok = np.abs(Dflat @ g - np.kron(g, g)).max() < 1e-9 and abs(eps @ g - 1) < 1e-9
    return g if ok else None


def grouplikes(H: HopfAlgebra, seed: int = 0) -> list[dict]:
    """Grouplike elements of H, each verified exactly.

    Over a prime field with p^(dim - 1) small the affine slice eps(g) = 1 is
    searched exhaustively. Otherwise common eigenvectors of the right-hit
    operators are found numerically, recognized as small cyclotomic or
    rational numbers and then checked exactly.
    """
    found: list[dict] = []

    def add(g):
        if g and is_grouplike(H, g) and g not in found:
            found.append(g)

    if isinstance(H.field, PrimeField):
        if H.field.p ** H.dim > 10 ** 6:
            raise NotImplementedError("exhaustive grouplike search is too large")
        for v in H.field.vectors(H.dim):
            add(H.sparse(v))
        return found
    for v in _numeric_grouplike_candidates(H, seed):
        exact = [H.field.recognize(complex(z), tol=1e-8) for z in v]
        if all(x is not None for x in exact):
            add(H.sparse([H.field(x) for x in exact]))
    return sorted(found, key=lambda g: sorted(g))


def pivotal_elements(H: HopfAlgebra, candidates=None, seed: int = 0) -> list[dict]:
    """Grouplikes g with S^2(h) = g h g^-1 for all h; empty if none qualify.

    ``candidates`` (sparse or dense vectors) replaces the grouplike search.
    """
    if candidates is None:
        pool = grouplikes(H, seed)
    else:
        pool = [c if isinstance(c, dict) else H.sparse(c) for c in candidates]
    return [g for g in pool if pivotal_check(H, g).passed]


# -- modules and characters -----------------------------------------------------------


def trivial_module(H: HopfAlgebra) -> HModule:
    return HModule(1, tuple(((c,),) for c in H.counit), "trivial", True)


def regular_module(H: HopfAlgebra) -> HModule:
    n = H.dim
    action = []
    for i in range(n):
        M = [[H.zero] * n for _ in range(n)]
        for t in range(n):
            for k, c in H.mult[i][t].items():
                M[k][t] = c
        action.append(M)
    return HModule(n, tuple(action), "regular", False)


def tensor_module(H: HopfAlgebra, X: HModule, Y: HModule) -> HModule:
    """X (x) Y with b_i acting by sum Delta_i^{jk} rho_X(b_j) (x) rho_Y(b_k)."""
    d = X.dim * Y.dim
    action = []
    for i in range(H.dim):
        M = [[H.zero] * d for _ in range(d)]
        for (j, k), c in H.comult[i].items():
            A, B = X.action[j], Y.action[k]
            for r1 in range(X.dim):
                for c1 in range(X.dim):
                    a = A[r1][c1]
                    if not a:
                        continue
                    for r2 in range(Y.dim):
                        for c2 in range(Y.dim):
                            b = B[r2][c2]
                            if b:
                                M[r1 * Y.dim + r2][c1 * Y.dim + c2] += c * a * b
        action.append(M)
    return HModule(d, tuple(action), f"{X.label}*{Y.label}", False)


def internal_character(H: HopfAlgebra, g: dict, X: HModule) -> list:
    """ch(X)(b_i) = Trace_X(g b_i)."""
    G = module_matrix(H, X, g)
    out = []
    for i in range(H.dim):
        P = _matmul(G, X.action[i], H.zero)
        acc = H.zero
        for r in range(X.dim):
            if P[r][r]:
                acc = acc + P[r][r]
        out.append(acc)
    return out


def check_character_laws(H: HopfAlgebra, g: dict, modules, simples: bool | None = None) -> Report:
    """Characters lie in CF, multiply under tensor product and (for simples) are independent."""
    modules = list(modules)
    rep = Report("character laws")
    for m, X in enumerate(modules):
        c = module_check(H, X)
        c.name = f"module_{m}_valid"
        rep.add(c)
    chars = [internal_character(H, g, X) for X in modules]
    cf = class_functions(H)
    bad = next(((m,) for m, ch in enumerate(chars) if not span_contains(cf, [ch])), None)
    rep.add(Check("characters_are_class_functions", bad is None, counterexample=bad))
    bad = None
    for a, b in itertools.product(range(len(modules)), repeat=2):
        XY = tensor_module(H, modules[a], modules[b])
        if internal_character(H, g, XY) != convolution(H, chars[a], chars[b]):
            bad = (a, b)
            break
    rep.add(Check("multiplicativity", bad is None, counterexample=bad))
    if simples is None:
        simples = all(X.simple for X in modules)
    if simples and chars:
        r = rank(chars, H.dim)
        rep.add(Check("linear_independence", r == len(chars),
                      detail=f"rank {r} of {len(chars)} characters"))
    return rep


def character_span(H: HopfAlgebra, g: dict, modules) -> tuple[int, int]:
    """(dim of the span of the internal characters, dim CF); equal for a full set of
    simples exactly when H-mod is semisimple."""
    chars = [internal_character(H, g, X) for X in modules]
    return (rank(chars, H.dim) if chars else 0), len(class_functions(H))


# -- Fourier transform, Radford's trace formula, Maschke -------------------------------------


@dataclass
class NormalizedIntegrals:
    cointegral: list
    integral: dict


def normalized_integrals(H: HopfAlgebra) -> NormalizedIntegrals:
    """Categorical cointegral lam (lam(1) = 1 when possible) and integral with <lam, Lam> = 1."""
    I = integrals(H)
    C = cointegrals(H)
    if not I.categorical or not C.categorical:
        raise UnimodularityError("H is not unimodular: no nonzero categorical (co)integral")
    lam = list(C.categorical[0])
    at_one = H.pair(lam, H.unit_vec())
    if at_one:
        lam = [c / at_one for c in lam]
    Lam = H.sparse(I.categorical[0])
    p = H.pair(lam, Lam)
    if not p:
        raise NormalizationError("<lam, Lam> = 0; integrals cannot be normalized")
    Lam = {k: v / p for k, v in Lam.items()}
    return NormalizedIntegrals(lam, Lam)


def fourier(H: HopfAlgebra, lam, a: dict) -> list:
    """F(a)(b_i) = lam(S^-1(a) b_i)."""
    sa = H.Sinv(a)
    return [H.pair(lam, H.mul(sa, H.basis(i))) for i in range(H.dim)]


def fourier_inv(H: HopfAlgebra, Lam: dict, f) -> dict:
    """F^-1(f) = f(Lam_(1)) Lam_(2)."""
    out: dict = {}
    for (j, k), c in H.comul(Lam).items():
        if f[j]:
            _axpy(out, c * f[j], H.basis(k))
    return out


def fourier_roundtrip(H: HopfAlgebra, elements=None, seed: int = 0) -> Report:
    """F^-1(F(a)) = a on a basis of the center (or on the given central elements)."""
    N = normalized_integrals(H)
    zs = center(H) if elements is None else elements
    rep = Report("Fourier round trip")
    bad = None
    for m, z in enumerate(zs):
        a = z if isinstance(z, dict) else H.sparse(z)
        if fourier_inv(H, N.integral, fourier(H, N.cointegral, a)) != a:
            bad = (m,)
            break
    rep.add(Check("inverse_after_forward", bad is None, counterexample=bad,
                  detail=f"{len(zs)} central elements"))
    cf = class_functions(H)
    images = [fourier(H, N.cointegral, z if isinstance(z, dict) else H.sparse(z)) for z in zs]
    rep.add(Check("image_in_class_functions", span_contains(cf, images)))
    return rep


def radford_trace(H: HopfAlgebra, f):
    """Trace of a -> S^2(a_(1)) f(a_(2))."""
    acc = H.zero
    for i in range(H.dim):
        for (j, k), c in H.comult[i].items():
            if f[k]:
                coeff = H.S2(H.basis(j)).get(i)
                if coeff:
                    acc = acc + c * f[k] * coeff
    return acc


def radford_check(H: HopfAlgebra, lam, Lam: dict, f) -> Report:
    lhs = radford_trace(H, f)
    rhs = H.pair(f, Lam) * H.pair(lam, H.unit_vec())
    rep = Report("Radford trace formula")
    rep.add(Check("radford", lhs == rhs, detail=f"trace={lhs}, f(Lam) lam(1)={rhs}"))
    return rep


def maschke_indicator(H: HopfAlgebra, Lam: dict):
    """eps(Lam): nonzero exactly when the unimodular H is semisimple."""
    return H.eps(Lam)


def random_class_function(H: HopfAlgebra, rng: random.Random, basis=None):
    basis = class_functions(H) if basis is None else basis
    out = [H.zero] * H.dim
    for b in basis:
        c = H.field(rng.randint(-5, 5))
        if c:
            out = [x + c * y for x, y in zip(out, b)]
    return out


def intersect(H: HopfAlgebra, a, b):
    return intersect_spans(a, b, H.dim, H.zero, H.one)
