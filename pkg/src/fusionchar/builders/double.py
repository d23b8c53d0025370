"""Drinfeld double D(H) = H*cop (x) H built from the structure constants of H."""
from __future__ import annotations

import dataclasses

from ..errors import StructureError
from ..hopf.algebra import HModule, HopfAlgebra, _axpy, _matmul, module_check, validate_hopf
from .taft import taft_algebra


def drinfeld_double(H: HopfAlgebra, check: bool = True) -> HopfAlgebra:
    """Double of H on the basis delta^p (x) b_a, index p*n + a.

    (f (x) a)(f' (x) b) = f (a_(1) -> f' <- S^-1(a_(3))) (x) a_(2) b, where
    (a -> f <- c)(y) = f(c y a); Delta(f (x) a) = (f_(2) (x) a_(1)) (x) (f_(1) (x) a_(2));
    S(f (x) a) = (eps (x) S(a)) (f o S^-1 (x) 1). The result is validated.
    """
    n = H.dim
    F = H.field
    one, zero = F.one, F.zero
    try:
        sinv = [H.Sinv(H.basis(i)) for i in range(n)]
    except StructureError as exc:
        raise StructureError(f"cannot build the double: {exc}") from exc
    e = H.basis

    def idx(p, a):
        return p * n + a

    # product in H*: delta^p delta^q = sum_i Delta_i^{pq} delta^i
    dual_mult = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for (p, q), c in H.comult[i].items():
            dual_mult[p][q][i] = c
    # Delta^(2)(b_a) as {(u, v, w): c}
    delta2 = []
    for a in range(n):
        acc: dict = {}
        for (u, t), c in H.comult[a].items():
            for (v, w), d in H.comult[t].items():
                _axpy(acc, c * d, {(u, v, w): one})
        delta2.append(acc)
    # K[w][u][q] = {i: coefficient of b_q in S^-1(b_w) b_i b_u}
    K = {}

    def hit(q, u, w):
        key = (q, u, w)
        if key not in K:
            out = {}
            for i in range(n):
                c = H.mul(H.mul(sinv[w], e(i)), e(u)).get(q)
                if c:
                    out[i] = c
            K[key] = out
        return K[key]

    N = n * n
    mult = [[{} for _ in range(N)] for _ in range(N)]
    for a in range(n):
        for q in range(n):
            # (eps (x) b_a)(delta^q (x) 1) = sum h (x) b_v
            pieces: dict = {}
            for (u, v, w), c in delta2[a].items():
                for i, k in hit(q, u, w).items():
                    _axpy(pieces, c * k, {(i, v): one})
            for p in range(n):
                for b in range(n):
                    out: dict = {}
                    for (i, v), c in pieces.items():
                        for t, s in dual_mult[p][i].items():
                            for r, m in H.mult[v][b].items():
                                _axpy(out, c * s * m, {idx(t, r): one})
                    mult[idx(p, a)][idx(q, b)] = out

    eps_dual = [c for c in H.counit]  # eps as a form: sum eps_i delta^i
    unit = [eps_dual[p] * H.unit[a] for p in range(n) for a in range(n)]
    counit = [H.unit[p] * H.counit[a] for p in range(n) for a in range(n)]
    comult = []
    for p in range(n):
        # Delta_{H*}(delta^p) = sum_{ij} m_ij^p delta^i (x) delta^j
        dual_co = [(i, j, H.mult[i][j][p]) for i in range(n) for j in range(n)
                   if p in H.mult[i][j]]
        for a in range(n):
            acc: dict = {}
            for i, j, c in dual_co:
                for (u, v), d in H.comult[a].items():
                    _axpy(acc, c * d, {(idx(j, u), idx(i, v)): one})
            comult.append(acc)

    def dmul(x, y):
        out: dict = {}
        for s, c in x.items():
            for t, d in y.items():
                _axpy(out, c * d, mult[s][t])
        return out

    antipode = []
    for p in range(n):
        # f o S^-1 = sum_i (coefficient of b_p in S^-1(b_i)) delta^i
        f_s = {idx(i, 0): sinv[i][p] for i in range(n) if sinv[i].get(p)}
        f_s = _to_h_unit(f_s, H, idx)
        for a in range(n):
            left = {}
            for r, c in H.S(e(a)).items():
                for i in range(n):
                    if eps_dual[i]:
                        _axpy(left, c * eps_dual[i], {idx(i, r): one})
            prod = dmul(left, f_s)
            antipode.append([prod.get(t, zero) for t in range(N)])
    labels = tuple(f"d{p}|{a}" for p in range(n) for a in range(n))
    D = HopfAlgebra(N, F, mult, unit, comult, counit, antipode, name=f"D({H.name})" if H.name
                    else "D(H)", basis_labels=labels)
    if check:
        rep = validate_hopf(D)
        if not rep.passed:
            raise StructureError(f"double failed validation: {[c.name for c in rep.failures]}")
    return D


def _to_h_unit(f_first: dict, H: HopfAlgebra, idx) -> dict:
    """Turn {idx(i, 0): c} (a form tensored with b_0) into the form tensored with 1_H."""
    out: dict = {}
    for key, c in f_first.items():
        i = key // H.dim
        for a, u in enumerate(H.unit):
            if u:
                _axpy(out, c * u, {idx(i, a): H.one})
    return out


def double_module(H: HopfAlgebra, dual_action, h_action, label: str = "",
                  simple: bool = False) -> HModule:
    """D(H)-module from matrices of delta^p and b_a; delta^p (x) b_a acts as their product.

    Only the assembly is done here; run ``module_check`` against the double to verify.
    """
    n = H.dim
    zero = H.zero
    action = [_matmul(dual_action[p], h_action[a], zero) for p in range(n) for a in range(n)]
    return HModule(len(h_action[0]), action, label, simple)


def sweedler_double() -> HopfAlgebra:
    """D(T2) with its four simple modules: two of dimension 1 and two of dimension 2.

    On each simple module g, x in T2 and the dual generators alpha (g -> -1) and
    xi (x -> 1) act by the matrices G, X, A, Xi; the dual basis is recovered as
    delta^1 = (eps + alpha)/2, delta^x = (xi + alpha xi)/2, delta^g = (eps - alpha)/2,
    delta^gx = (xi - alpha xi)/2.
    """
    H = taft_algebra(2)
    F = H.field
    half = F.one / F(2)

    def mat(rows):
        return [[F(x) for x in r] for r in rows]

    def combo(a, P, b, Q):
        return [[a * p + b * q for p, q in zip(rp, rq)] for rp, rq in zip(P, Q)]

    def build(G, X, A, Xi, label, simple=True):
        G, X, A, Xi = mat(G), mat(X), mat(A), mat(Xi)
        d = len(G)
        I = [[F.one if r == c else F.zero for c in range(d)] for r in range(d)]
        AXi = _matmul(A, Xi, F.zero)
        h_action = [I, X, G, _matmul(G, X, F.zero)]
        dual_action = [combo(half, I, half, A), combo(half, Xi, half, AXi),
                       combo(half, I, -half, A), combo(half, Xi, -half, AXi)]
        return double_module(H, dual_action, h_action, label, simple)

    simples = (
        build([[1]], [[0]], [[1]], [[0]], "L+"),
        build([[-1]], [[0]], [[-1]], [[0]], "L-"),
        build([[1, 0], [0, -1]], [[0, 1], [0, 0]], [[-1, 0], [0, 1]], [[0, 0], [2, 0]], "P+"),
        build([[1, 0], [0, -1]], [[0, 0], [1, 0]], [[-1, 0], [0, 1]], [[0, -2], [0, 0]], "P-"),
    )
    D = drinfeld_double(H)
    for X in simples:
        chk = module_check(D, X)
        if not chk.passed:
            raise StructureError(f"module {X.label} fails: {chk.counterexample}")
    return dataclasses.replace(D, modules=simples)
