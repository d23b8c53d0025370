"""Taft algebras T(omega): generated by g, x with g^N = 1, x^N = 0, gx = omega xg."""
from __future__ import annotations

import math

from ..errors import ParameterError
from ..hopf.algebra import HModule, HopfAlgebra, _axpy
from ..scalar.fields import CyclotomicField


def taft_algebra(N: int, omega_power: int = 1) -> HopfAlgebra:
    """N^2-dimensional Taft algebra over Q(zeta_N) with omega = zeta_N^omega_power.

    Basis g^i x^j has index i*N + j. Delta(x) = x (x) g + 1 (x) x,
    S(x) = -x g^-1, and the pivotal element is g. The N one-dimensional
    simples V_i (g -> omega^i, x -> 0) are attached as modules.
    """
    if not isinstance(N, int) or N < 2:
        raise ParameterError("N must be an integer >= 2")
    if math.gcd(omega_power, N) != 1:
        raise ParameterError("omega_power must be coprime to N")
    F = CyclotomicField(N)
    one, zero = F.one, F.zero
    w = F.zeta(omega_power % N)
    winv = w.inverse()
    n = N * N

    def idx(i, j):
        return (i % N) * N + j

    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(N):
        for j in range(N):
            for k in range(N):
                for l in range(N):
                    if j + l < N:
                        mult[idx(i, j)][idx(k, l)] = {idx(i + k, j + l): winv ** (j * k)}

    def mul(x, y):
        out: dict = {}
        for a, c in x.items():
            for b, d in y.items():
                _axpy(out, c * d, mult[a][b])
        return out

    def tmul(X, Y):
        out: dict = {}
        for (a, b), c in X.items():
            for (p, q), d in Y.items():
                for u, s in mult[a][p].items():
                    for v, t in mult[b][q].items():
                        _axpy(out, c * d * s * t, {(u, v): one})
        return out

    g, x = {idx(1, 0): one}, {idx(0, 1): one}
    unit_el = {0: one}
    g_inv = {idx(N - 1, 0): one}
    dg = {(idx(1, 0), idx(1, 0)): one}
    dx = {(idx(0, 1), idx(1, 0)): one, (0, idx(0, 1)): one}
    s_g = g_inv
    s_x = {k: -v for k, v in mul(x, g_inv).items()}

    comult, antipode, counit = [None] * n, [None] * n, [zero] * n
    for i in range(N):
        for j in range(N):
            D = {(0, 0): one}
            Sv = dict(unit_el)
            for _ in range(i):
                D = tmul(D, dg)
            for _ in range(j):
                D = tmul(D, dx)
            # S is an antihomomorphism: S(g^i x^j) = S(x)^j S(g)^i
            for _ in range(j):
                Sv = mul(Sv, s_x)
            for _ in range(i):
                Sv = mul(Sv, s_g)
            comult[idx(i, j)] = D
            antipode[idx(i, j)] = [Sv.get(t, zero) for t in range(n)]
            counit[idx(i, j)] = one if j == 0 else zero
    unit = [one if t == 0 else zero for t in range(n)]
    pivotal = [g.get(t, zero) for t in range(n)]
    modules = tuple(
        HModule(1, tuple(((w ** (m * i) if j == 0 else zero,),)
                         for i in range(N) for j in range(N)), f"V{m}", True)
        for m in range(N))
    labels = tuple(f"g^{i}x^{j}" for i in range(N) for j in range(N))
    return HopfAlgebra(n, F, mult, unit, comult, counit, antipode, pivotal, modules,
                       f"T{N}" if omega_power == 1 else f"T{N}_{omega_power}", labels)


def taft_class_function_basis(N: int, omega_power: int = 1) -> list[list]:
    """The algebra maps alpha_m: g -> omega^m, x -> 0, as forms on the basis g^i x^j."""
    F = CyclotomicField(N)
    w = F.zeta(omega_power % N)
    return [[w ** (m * i) if j == 0 else F.zero for i in range(N) for j in range(N)]
            for m in range(N)]
