"""2x2 matrix representations used as an independent oracle for the engine.

Anticommutative elements are evaluated in the Pauli representation; commutative
elements in a diagonal representation ``g_i -> diag(1, t_i)`` whose entries are
distinct, so different monomials stay distinguishable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .graded import AlgebraError, GradedElement, Mode


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=Fraction(0), im=Fraction(0)):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def of(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value))

    def __add__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = GaussianRational.of(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


class Mat2(tuple):
    """Row-major 2x2 matrix ``(a, b, c, d)`` over the Gaussian rationals."""

    def __new__(cls, a, b, c, d):
        return super().__new__(cls, (GaussianRational.of(v) for v in (a, b, c, d)))

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> Mat2:
        return cls(0, 0, 0, 0)

    def __add__(self, other):
        return Mat2(*(x + y for x, y in zip(self, other)))

    def __neg__(self):
        return Mat2(*(-x for x in self))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            return Mat2(*(x * other for x in self))
        a, b, c, d = self
        e, f, g, h = other
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __rmul__(self, scalar):
        return Mat2(*(x * scalar for x in self))

    def __pow__(self, n: int) -> Mat2:
        if n < 0:
            raise ValueError("matrix powers are only taken for n >= 0")
        result, base = Mat2.identity(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


I = 1j

PAULI = (
    Mat2(0, 1, 1, 0),
    Mat2(0, -I, I, 0),
    Mat2(1, 0, 0, -1),
)


@dataclass(frozen=True)
class MatrixRep:
    mode: Mode
    generators: tuple[Mat2, ...]

    def __post_init__(self):
        one = Mat2.identity()
        gens = self.generators
        for i, s in enumerate(gens):
            if self.mode is Mode.ANTICOMMUTATIVE and s * s != one:
                raise ValueError(f"generator {i + 1} does not square to the identity")
            for t in gens[i + 1:]:
                expected = -(t * s) if self.mode is Mode.ANTICOMMUTATIVE else t * s
                if s * t != expected:
                    raise ValueError("generators violate the commutation rule of the mode")

    @classmethod
    def pauli(cls) -> MatrixRep:
        return cls(Mode.ANTICOMMUTATIVE, PAULI)

    @classmethod
    def diagonal(cls) -> MatrixRep:
        return cls(Mode.COMMUTATIVE, (Mat2(1, 0, 0, 2), Mat2(1, 0, 0, 3), Mat2(1, 0, 0, 5)))

    @classmethod
    def for_mode(cls, mode: Mode | str) -> MatrixRep:
        return _rep_for(Mode.parse(mode))

    def generator_power(self, i: int, e: int) -> Mat2:
        return _generator_power(self, i, e)


@lru_cache(maxsize=None)
def _rep_for(mode: Mode) -> MatrixRep:
    return MatrixRep.pauli() if mode is Mode.ANTICOMMUTATIVE else MatrixRep.diagonal()


@lru_cache(maxsize=None)
def _generator_power(rep: MatrixRep, i: int, e: int) -> Mat2:
    return rep.generators[i] ** e


def matrix_eval(x: GradedElement, values: Sequence) -> Mat2:
    """Substitute ``values[i] * M_i`` for generator ``i+1`` and evaluate."""
    if x.laurent is not None:
        raise AlgebraError("matrix_eval needs a polynomial element")
    if x.dim > 3:
        raise AlgebraError("no 2x2 representation beyond three generators")
    if len(values) != x.dim:
        raise AlgebraError("need one value per generator")
    rep = MatrixRep.for_mode(x.mode)
    values = [Fraction(v) for v in values]
    # (v*M)**e == v**e * M**e; the unscaled words have small entries
    words: dict[tuple[int, ...], Mat2] = {}
    total = Mat2.zero()
    for key, coeff in x.items():
        scalar = coeff
        for v, e in zip(values, key):
            scalar *= v ** e
        if key not in words:
            word = Mat2.identity()
            for i, e in enumerate(key):
                if e:
                    word = word * rep.generator_power(i, e)
            words[key] = word
        total = total + words[key] * scalar
    return total
