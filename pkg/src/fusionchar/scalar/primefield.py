"""Elements of the prime field F_p."""
from __future__ import annotations

from dataclasses import dataclass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeFieldElem:
    p: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _other(self, other) -> int | None:
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value - v)

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, v - self.value)

    def __neg__(self):
        return PrimeFieldElem(self.p, -self.value)

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value * v)

    __rmul__ = __mul__

    def inverse(self) -> PrimeFieldElem:
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return PrimeFieldElem(self.p, pow(self.value, self.p - 2, self.p))

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self * PrimeFieldElem(self.p, v).inverse()

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self.inverse() * v

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElem(self.p, pow(self.value, k, self.p))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"
