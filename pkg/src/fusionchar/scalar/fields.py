"""Field descriptors: one object per scalar kind, used to coerce, parse and print."""
from __future__ import annotations

import itertools
from fractions import Fraction

from ..errors import ParseError
from .cyclotomic import CycNumber, recognize, totient
from .primefield import PrimeFieldElem, is_prime


class RationalField:
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, CycNumber):
            return x.to_fraction()
        return Fraction(x)

    def parse(self, obj) -> Fraction:
        if isinstance(obj, dict):
            return self(CycNumber.from_json(obj))
        if isinstance(obj, bool):
            raise ParseError(f"exact scalar expected, got {obj!r}")
        if isinstance(obj, float):
            if not obj.is_integer():
                raise ParseError(f"exact scalar expected, got float {obj!r}")
            return Fraction(int(obj))
        try:
            return Fraction(str(obj))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {obj!r}") from exc

    def to_literal(self, x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def to_complex(self, x) -> complex:
        return complex(float(x))

    def recognize(self, z: complex, tol: float = 1e-9):
        if abs(z.imag) > tol:
            return None
        q = Fraction(z.real).limit_denominator(10 ** 6)
        return q if abs(float(q) - z.real) <= tol * max(1.0, abs(z.real)) else None

    def elements(self):
        raise TypeError("Q is infinite")

    def to_json(self):
        return {"type": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class CyclotomicField:
    characteristic = 0

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor

    @property
    def zero(self):
        return CycNumber(self.conductor)

    @property
    def one(self):
        return CycNumber.rational(1, self.conductor)

    def zeta(self, k: int = 1) -> CycNumber:
        return CycNumber.zeta(self.conductor, k)

    def __call__(self, x) -> CycNumber:
        if isinstance(x, CycNumber):
            if self.conductor % x.conductor:
                raise ValueError(f"{x!r} does not lie in Q(zeta_{self.conductor})")
            return x.lift(self.conductor)
        return CycNumber.rational(x, self.conductor)

    def parse(self, obj) -> CycNumber:
        if isinstance(obj, dict):
            try:
                return self(CycNumber.from_json(obj))
            except (KeyError, ValueError) as exc:
                raise ParseError(f"bad cyclotomic literal {obj!r}: {exc}") from exc
        return self(RationalField().parse(obj))

    def to_literal(self, x):
        x = self(x)
        if x.is_rational():
            return RationalField().to_literal(x.to_fraction())
        return x.to_json()

    def to_complex(self, x) -> complex:
        return x.to_complex()

    def recognize(self, z: complex, tol: float = 1e-9):
        return recognize(z, self.conductor, tol)

    def to_json(self):
        return {"type": "cyclotomic", "conductor": self.conductor}

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("cyc", self.conductor))

    def __repr__(self):
        return f"Q(zeta_{self.conductor})"


class PrimeField:
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    @property
    def zero(self):
        return PrimeFieldElem(self.p, 0)

    @property
    def one(self):
        return PrimeFieldElem(self.p, 1)

    def __call__(self, x) -> PrimeFieldElem:
        if isinstance(x, PrimeFieldElem):
            return x
        if isinstance(x, CycNumber):
            x = x.to_fraction()
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ValueError(f"{x} has no image in F_{self.p}")
        return PrimeFieldElem(self.p, x.numerator) / x.denominator

    def parse(self, obj) -> PrimeFieldElem:
        return self(RationalField().parse(obj))

    def to_literal(self, x):
        return str(self(x).value)

    def to_complex(self, x):
        raise TypeError("prime-field scalars have no complex embedding")

    def recognize(self, z, tol=1e-9):
        return None

    def elements(self):
        return [PrimeFieldElem(self.p, v) for v in range(self.p)]

    def vectors(self, n: int):
        return itertools.product(self.elements(), repeat=n)

    def to_json(self):
        return {"type": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


def field_from_json(obj) -> RationalField | CyclotomicField | PrimeField:
    try:
        kind = obj["type"]
        if kind == "rational":
            return RationalField()
        if kind == "cyclotomic":
            return CyclotomicField(int(obj["conductor"]))
        if kind == "prime":
            return PrimeField(int(obj["p"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad field descriptor {obj!r}") from exc
    raise ParseError(f"unknown field type {kind!r}")


__all__ = ["RationalField", "CyclotomicField", "PrimeField", "field_from_json", "totient"]
