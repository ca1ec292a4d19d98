"""Exact arithmetic in real quadratic fields Q(sqrt(D))."""
from __future__ import annotations

import math
from fractions import Fraction


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(f, d)`` with ``n == f*f*d`` and ``d`` squarefree."""
    if n <= 0:
        raise ValueError("only positive radicands are supported")
    f = 1
    d = n
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            f *= p
        p += 1
    return f, d


class QuadraticNumber:
    """``a + b*sqrt(D)`` with rational ``a, b`` and squarefree ``D >= 1``.

    ``D == 1`` is the rational field; there ``b`` is folded into ``a``.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D: int = 1):
        if D < 1 or squarefree_split(D)[0] != 1:
            raise ValueError(f"D={D} is not a squarefree positive integer")
        a, b = Fraction(a), Fraction(b)
        if D == 1:
            a, b = a + b, Fraction(0)
        self.a, self.b, self.D = a, b, D

    @classmethod
    def sqrt(cls, n: int) -> QuadraticNumber:
        f, d = squarefree_split(n)
        return cls(0, f, d) if d != 1 else cls(f, 0, 1)

    def _lift(self, other) -> QuadraticNumber:
        if isinstance(other, QuadraticNumber):
            if other.D != self.D and other.b and self.b:
                raise ValueError(f"mixing Q(sqrt({self.D})) and Q(sqrt({other.D}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.D)
        return NotImplemented

    def _field(self, other: QuadraticNumber) -> int:
        return self.D if self.b or self.D == other.D else other.D if other.b else max(self.D, other.D)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.D)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._field(other)
        return QuadraticNumber(
            self.a * other.a + self.b * other.b * D,
            self.a * other.b + self.b * other.a,
            D,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def inverse(self) -> QuadraticNumber:
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("zero has no inverse")
        return QuadraticNumber(self.a / nrm, -self.b / nrm, self.D)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> QuadraticNumber:
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticNumber(1, 0, self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadraticNumber):
            return NotImplemented
        return self.a == other.a and self.b == other.b and (self.b == 0 or self.D == other.D)

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.D))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self):
        if self.b == 0:
            return f"QuadraticNumber({self.a})"
        return f"QuadraticNumber({self.a} + {self.b}*sqrt({self.D}))"
