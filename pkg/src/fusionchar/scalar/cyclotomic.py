"""
Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored by its coefficients in the power basis
1, z, ..., z^(phi(N)-1), where z = exp(2*pi*i/N), reduced modulo the
N-th cyclotomic polynomial. Operands with different conductors are lifted
to the lcm of the two conductors before combining.

>>> z = CycNumber.zeta(5)
>>> phi_bar = z + z**4
>>> round((phi_bar + 1).to_complex().real, 12)
1.618033988750
"""
from __future__ import annotations

import cmath
import functools
import math
from fractions import Fraction
from numbers import Rational as _Rational

import numpy as np


def totient(n: int) -> int:
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # x^n - 1 divided by every Phi_d with d | n, d < n
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dd] // den[dd]
        q[k] = c
        for t in range(dd + 1):
            num[k + t] -= c * den[t]
    assert not any(num), "non-exact polynomial division"
    return q


@functools.lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds z^k reduced into the power basis, for 0 <= k < n."""
    phi = totient(n)
    poly = cyclotomic_poly(n)
    rows = []
    v = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(v))
        top = v[-1]
        v = [0] + v[:-1]
        if top:
            for t in range(phi):
                v[t] -= top * poly[t]
    return tuple(rows)


@functools.lru_cache(maxsize=None)
def _basis_traces(n: int) -> tuple[int, ...]:
    """Field trace of each power-basis element z^k (Ramanujan sums)."""
    out = []
    for k in range(totient(n)):
        g = math.gcd(k, n)
        m = n // g
        out.append(_mobius(m) * totient(n) // totient(m))
    return tuple(out)


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _coerce_rational(x) -> Fraction | None:
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, _Rational):
        return Fraction(x.numerator, x.denominator)
    return None


class CycNumber:
    """An element of Q(zeta_N) in the power basis."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs=None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        phi = totient(conductor)
        if coeffs is None:
            coeffs = [Fraction(0)] * phi
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != phi:
            # longer vectors are read as exponents of z and reduced
            coeffs = _reduce_exponents(conductor, coeffs)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    # construction helpers

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CycNumber:
        """The root of unity exp(2*pi*i*k/n)."""
        row = _power_table(n)[k % n]
        return cls(n, row)

    @classmethod
    def rational(cls, q, conductor: int = 1) -> CycNumber:
        phi = totient(conductor)
        return cls(conductor, [Fraction(q)] + [Fraction(0)] * (phi - 1))

    @classmethod
    def from_exponents(cls, n: int, terms: dict[int, object]) -> CycNumber:
        """Build sum c_k z^k from a mapping k -> c_k (any integer k)."""
        acc = [Fraction(0)] * n
        for k, c in terms.items():
            acc[k % n] += Fraction(c)
        return cls(n, _reduce_exponents(n, acc))

    @classmethod
    def sqrt2(cls) -> CycNumber:
        z = cls.zeta(8)
        return z + z ** 7

    # lifting

    def lift(self, n: int) -> CycNumber:
        """Re-express self in Q(zeta_n); n must be a multiple of the conductor."""
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError(f"cannot lift conductor {self.conductor} to {n}")
        step = n // self.conductor
        acc = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                acc[(k * step) % n] += c
        return CycNumber(n, _reduce_exponents(n, acc))

    def _align(self, other):
        if isinstance(other, CycNumber):
            if other.conductor == self.conductor:
                return self, other
            n = math.lcm(self.conductor, other.conductor)
            return self.lift(n), other.lift(n)
        q = _coerce_rational(other)
        if q is None:
            return None
        return self, CycNumber.rational(q, self.conductor)

    # arithmetic

    def __add__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNumber(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNumber(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        q = _coerce_rational(other)
        if q is not None:
            return CycNumber(self.conductor, [x * q for x in self.coeffs])
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = a.conductor
        raw = [Fraction(0)] * n
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    raw[(i + j) % n] += x * y
        return CycNumber(n, _reduce_exponents(n, raw))

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        from .linalg import solve

        n = self.conductor
        phi = totient(n)
        cols = [(self * CycNumber.zeta(n, k)).coeffs for k in range(phi)]
        mat = [[cols[c][r] for c in range(phi)] for r in range(phi)]
        rhs = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        x = solve(mat, rhs)
        return CycNumber(n, x)

    def __truediv__(self, other):
        q = _coerce_rational(other)
        if q is not None:
            if q == 0:
                raise ZeroDivisionError("division of cyclotomic number by zero")
            return CycNumber(self.conductor, [x / q for x in self.coeffs])
        if isinstance(other, CycNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        q = _coerce_rational(other)
        if q is None:
            return NotImplemented
        return self.inverse() * q

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNumber.rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CycNumber:
        """Complex conjugation z -> z^(N-1)."""
        return self.galois(-1)

    def galois(self, j: int) -> CycNumber:
        """Apply the automorphism z -> z^j, gcd(j, N) = 1."""
        n = self.conductor
        if math.gcd(j, n) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        acc = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                acc[(k * j) % n] += c
        return CycNumber(n, _reduce_exponents(n, acc))

    # predicates and comparisons

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integral(self) -> bool:
        """True when every power-basis coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self):
        # normalized trace does not depend on the ambient conductor
        tr = sum(c * t for c, t in zip(self.coeffs, _basis_traces(self.conductor)))
        return hash(Fraction(tr) / totient(self.conductor))

    def trace(self) -> Fraction:
        """Field trace from Q(zeta_N) down to Q."""
        return Fraction(sum(c * t for c, t in zip(self.coeffs, _basis_traces(self.conductor))))

    # numerics

    def to_complex(self) -> complex:
        n = self.conductor
        return complex(sum(float(c) * cmath.exp(2j * math.pi * k / n)
                           for k, c in enumerate(self.coeffs) if c))

    __complex__ = to_complex

    # serialization

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [_frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> CycNumber:
        n = int(obj["conductor"])
        coeffs = [Fraction(str(c)) for c in obj["coeffs"]]
        if len(coeffs) != totient(n):
            raise ValueError(f"cyclotomic literal of conductor {n} needs {totient(n)} coefficients")
        return cls(n, coeffs)

    def __repr__(self):
        return f"CycNumber({self.conductor}, [{', '.join(_frac_str(c) for c in self.coeffs)}])"

    def __str__(self):
        """GAP-style rendering, for instance ``1+E(5)+E(5)^4`` (power basis only)."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (f"E({self.conductor})" if k == 1 else f"E({self.conductor})^{k}")
            if not mono:
                term = _frac_str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{_frac_str(abs(c))}*{mono}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + term)
        return "".join(parts) if parts else "0"


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _reduce_exponents(n: int, raw) -> list[Fraction]:
    """Reduce sum raw[k] z^k into the power basis (exponents taken mod n)."""
    table = _power_table(n)
    phi = totient(n)
    out = [Fraction(0)] * phi
    for k, c in enumerate(raw):
        if not c:
            continue
        row = table[k % n]
        for t in range(phi):
            if row[t]:
                out[t] += c * row[t]
    return out


@functools.lru_cache(maxsize=64)
def _candidate_lattice(n: int, max_height: int):
    """Integer coefficient vectors of L1 norm <= max_height and their embeddings."""
    phi = totient(n)
    vecs = []

    def rec(pos, remaining, acc):
        if pos == phi:
            vecs.append(tuple(acc))
            return
        for c in range(-remaining, remaining + 1):
            acc.append(c)
            rec(pos + 1, remaining - abs(c), acc)
            acc.pop()

    rec(0, max_height, [])
    arr = np.array(vecs, dtype=np.int64).reshape(len(vecs), phi)
    basis = np.exp(2j * np.pi * np.arange(phi) / n)
    heights = np.abs(arr).sum(axis=1)
    return arr, arr @ basis, heights


def recognize(z: complex, conductor: int, tol: float = 1e-9, max_height: int = 4) -> CycNumber | None:
    """Find a small-height element of Q(zeta_N) whose embedding is within tol of z.

    Height is the L1 norm of the integer power-basis coefficients; among
    candidates inside the tolerance the lowest height wins.
    """
    arr, emb, heights = _candidate_lattice(conductor, max_height)
    dist = np.abs(emb - z)
    ok = np.nonzero(dist <= tol * max(1.0, abs(z)))[0]
    if ok.size == 0:
        return None
    best = ok[np.lexsort((dist[ok], heights[ok]))[0]]
    return CycNumber(conductor, [int(c) for c in arr[best]])
