"""JSON scalar literals shared by the file formats.

* ``{"conductor": N, "coeffs": ["p/q", ...]}`` -- exact cyclotomic number
* ``"p/q"`` or ``"p"`` string -- exact rational (a conductor-1 cyclotomic)
* plain JSON number -- float
* ``[re, im]`` -- complex float
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Number

from ..errors import ParseError
from .cyclotomic import CycNumber


def parse_scalar(obj):
    if isinstance(obj, dict):
        try:
            return CycNumber.from_json(obj)
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"bad cyclotomic literal {obj!r}: {exc}") from exc
    if isinstance(obj, str):
        try:
            return CycNumber.rational(Fraction(obj))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {obj!r}") from exc
    if isinstance(obj, bool):
        raise ParseError("booleans are not scalars")
    if isinstance(obj, (int, float)):
        return complex(float(obj))
    if isinstance(obj, (list, tuple)) and len(obj) == 2 and all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj):
        return complex(float(obj[0]), float(obj[1]))
    raise ParseError(f"unrecognized scalar literal {obj!r}")


def scalar_to_literal(x):
    if isinstance(x, CycNumber):
        if x.is_rational():
            q = x.to_fraction()
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Number):
        z = complex(x)
        return z.real if z.imag == 0 else [z.real, z.imag]
    raise TypeError(f"cannot serialize {x!r}")


def to_complex(x) -> complex:
    if isinstance(x, CycNumber):
        return x.to_complex()
    return complex(x)


def is_exact(x) -> bool:
    return isinstance(x, (CycNumber, Fraction, int)) and not isinstance(x, bool)
