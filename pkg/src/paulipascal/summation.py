"""Values for the divergent diagonal series of the negative pyramids.

A divergent series ``sum t_j`` whose generating function ``G(x) = sum t_j x**j``
is rational gets the value ``G(1)``: the closed form is evaluated outside the
disc of convergence, in the way ``1 - 1 + 1 - ...`` is assigned ``1/2`` from
``1/(1-x)``.  The diagonals met here are finite sums of the family
``c * x**s / (1 - r*x)**m``.  The Euler transform gives a second, unrelated
route for the series it can handle.

Diagonal terms are always regrouped by total degree before summation, since
divergent series are sensitive to regrouping.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .graded import Mode
from .hyperpyramid import LayerSpec, compositions, gamma_multinomial, negative_layer

Poly = tuple[Fraction, ...]  # coefficients, constant term first


def _trim(p: Sequence) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / q[-1]
        quot[shift] = c
        for i, b in enumerate(q):
            rem[i + shift] -= c * b
        rem = list(_trim(rem))
    return _trim(quot), _trim(rem)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return tuple(c / p[-1] for c in p) if p else ()


def poly_eval(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class RationalGF:
    """Rational generating function, kept in lowest terms with monic denominator."""

    numerator: Poly
    denominator: Poly = (Fraction(1),)

    def __post_init__(self):
        num, den = _trim(self.numerator), _trim(self.denominator)
        if not den:
            raise ZeroDivisionError("denominator is identically zero")
        g = poly_gcd(num, den) if num else den
        num, den = poly_divmod(num, g)[0], poly_divmod(den, g)[0]
        lead = den[-1]
        object.__setattr__(self, "numerator", tuple(c / lead for c in num))
        object.__setattr__(self, "denominator", tuple(c / lead for c in den))

    @classmethod
    def geometric(cls, s: int = 0, r=1, m: int = 1, coeff=1) -> RationalGF:
        """``coeff * x**s / (1 - r*x)**m``."""
        if s < 0 or m < 0:
            raise ValueError("shift and multiplicity must be >= 0")
        num = (Fraction(0),) * s + (Fraction(coeff),)
        den: Poly = (Fraction(1),)
        for _ in range(m):
            den = poly_mul(den, (Fraction(1), -Fraction(r)))
        return cls(num, den)

    def __add__(self, other: RationalGF) -> RationalGF:
        num = poly_add(poly_mul(self.numerator, other.denominator), poly_mul(other.numerator, self.denominator))
        return RationalGF(num, poly_mul(self.denominator, other.denominator))

    def scale(self, c) -> RationalGF:
        return RationalGF(tuple(Fraction(c) * a for a in self.numerator), self.denominator)

    def __rmul__(self, c) -> RationalGF:
        return self.scale(c)

    def taylor(self, count: int) -> list[Fraction]:
        """First ``count`` coefficients of the expansion at ``x = 0``."""
        den = self.denominator
        if den[0] == 0:
            raise ValueError("generating function has a pole at 0")
        out: list[Fraction] = []
        for j in range(count):
            c = self.numerator[j] if j < len(self.numerator) else Fraction(0)
            for i in range(1, min(j, len(den) - 1) + 1):
                c -= den[i] * out[j - i]
            out.append(c / den[0])
        return out


def abel_sum(gf: RationalGF, x0=1) -> Fraction:
    """Value assigned to the series expanded by ``gf`` at the point ``x0``."""
    x0 = Fraction(x0)
    den = poly_eval(gf.denominator, x0)
    if den == 0:
        raise ZeroDivisionError(f"generating function has a pole at {x0}")
    return poly_eval(gf.numerator, x0) / den


class Divergent:
    """Marker returned when the Euler transform does not settle."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Divergent"


DIVERGENT = Divergent()


@dataclass(frozen=True)
class DiagonalSeries:
    term: Callable[[int], Fraction]
    provenance: str = ""
    regrouping: str = field(default="by-total-degree", init=False)

    def prefix(self, count: int) -> list[Fraction]:
        return [Fraction(self.term(j)) for j in range(count)]

    @classmethod
    def from_terms(cls, terms: Sequence, provenance: str = "") -> DiagonalSeries:
        terms = [Fraction(t) for t in terms]
        return cls(lambda j: terms[j] if j < len(terms) else Fraction(0), provenance)


def euler_transform(terms: Sequence[Fraction]) -> list[Fraction]:
    """``b_n = sum_j C(n, j) a_j / 2**(n+1)`` over the available prefix."""
    return [
        sum((math.comb(n, j) * terms[j] for j in range(n + 1)), Fraction(0)) / 2 ** (n + 1)
        for n in range(len(terms))
    ]


def _settled_sum(terms: list[Fraction]) -> Fraction | None:
    half = len(terms) // 2
    nz = [j for j, t in enumerate(terms) if t != 0]
    if not nz or nz[-1] < half:
        return sum(terms, Fraction(0))
    start = half // 2
    tail = terms[start:]
    if all(t != 0 for t in tail):
        ratio = tail[1] / tail[0]
        if -1 < ratio < 1 and all(tail[i + 1] == ratio * tail[i] for i in range(len(tail) - 1)):
            return sum(terms[:start], Fraction(0)) + tail[0] / (1 - ratio)
    return None


def euler_transform_sum(series: DiagonalSeries, max_steps: int = 4, window: int = 48):
    """Repeated Euler transform; the exact value or :data:`DIVERGENT`.

    A transformed prefix counts as settled when its second half vanishes or
    its tail is geometric with ratio inside ``(-1, 1)``.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    terms = series.prefix(window)
    for _ in range(max_steps + 1):
        value = _settled_sum(terms)
        if value is not None:
            return value
        terms = euler_transform(terms)
    return DIVERGENT


def fit_geometric_family(terms: Sequence[Fraction]) -> RationalGF:
    """Identify ``c * x**s / (1 - r*x)**m`` from a prefix of its expansion.

    Raises ``ValueError`` if no member of the family reproduces every given term.
    """
    terms = [Fraction(t) for t in terms]
    nz = [j for j, t in enumerate(terms) if t != 0]
    if not nz:
        return RationalGF(())
    s = nz[0]
    u = terms[s:]
    if len(u) < 4:
        raise ValueError("need at least four terms after the leading zeros")
    if u[1] == 0:
        gf = RationalGF.geometric(s, 0, 0, u[0])
    else:
        r = 2 * u[2] / u[1] - u[1] / u[0]
        m = u[1] / u[0] / r if r else None
        if m is None or m.denominator != 1 or m < 1:
            raise ValueError("prefix is not in the geometric family")
        gf = RationalGF.geometric(s, r, int(m), u[0])
    if gf.taylor(len(terms)) != terms:
        raise ValueError("prefix is not in the geometric family")
    return gf


PREFIX = 16


def _groups(n: int):
    """Diagonal groups for index ``-n``: first-coordinate value and layer number."""
    target = -n - 1
    for m1 in range(0, n + 1):
        if (target - m1) % 2:
            continue
        s = (target - m1) // 2
        layer_n = m1 + s
        if layer_n < 0:
            yield m1, s, layer_n


@lru_cache(maxsize=128)
def _pyramid_layer(n: int, mode: Mode, truncation: int):
    return negative_layer(LayerSpec(3, n, mode, dominant=2, truncation=truncation))


def _pyramid_group_series(n_layer: int, m1: int, mode: Mode) -> DiagonalSeries:
    def term(j: int) -> Fraction:
        trunc = -(-(m1 + j + 1) // PREFIX) * PREFIX
        return _pyramid_layer(n_layer, mode, trunc)[(m1, n_layer - m1 - j, j)]

    return DiagonalSeries(term, f"pyramid layer {n_layer}, first exponent {m1}, {mode.value}")


def jacobsthal_negative_diagonal(n: int) -> Fraction:
    """Value of the diagonal for the Jacobsthal number of index ``-n``.

    The diagonal runs through the second negative Pascal pyramid; each group
    at fixed first exponent is a shifted geometric-family series.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = RationalGF(())
    for m1, _, layer_n in _groups(n):
        series = _pyramid_group_series(layer_n, m1, Mode.COMMUTATIVE)
        total = total + fit_geometric_family(series.prefix(PREFIX))
    return abel_sum(total)


def _parity_split(series: DiagonalSeries, parity: int) -> DiagonalSeries:
    return DiagonalSeries(lambda i: series.term(2 * i + parity), f"{series.provenance}, parity {parity}")


def pauli_jacobsthal_negative_diagonal(n: int) -> Fraction:
    """Value of the anticommutative diagonal for the Pauli Jacobsthal index ``-n``.

    The terms repeat their sign in pairs, so each group is split into its
    even and odd subseries, and each subseries is summed separately.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be a positive odd integer")
    value = Fraction(0)
    for m1, _, layer_n in _groups(n):
        series = _pyramid_group_series(layer_n, m1, Mode.ANTICOMMUTATIVE)
        for parity in (0, 1):
            sub = _parity_split(series, parity)
            value += abel_sum(fit_geometric_family(sub.prefix(PREFIX)))
    return value


def _gamma_group_series(layer_n: int, m1: int, s: int, k: int) -> DiagonalSeries:
    def term(j: int) -> Fraction:
        return sum(
            (gamma_multinomial(layer_n, (m1, s - j, *free)) for free in compositions(j, k - 1)),
            Fraction(0),
        )

    return DiagonalSeries(term, f"gamma multinomials of layer {layer_n}, first part {m1}, order {k}")


def fib_k_negative_diagonal(n: int, k: int) -> Fraction:
    """Diagonal value for the order-``k`` Fibonacci number of index ``-n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 2:
        raise ValueError("order must be >= 2 for a divergent diagonal")
    total = RationalGF(())
    for m1, s, layer_n in _groups(n):
        series = _gamma_group_series(layer_n, m1, s, k)
        total = total + fit_geometric_family(series.prefix(PREFIX))
    return abel_sum(total)


def fib3_negative_diagonal(n: int) -> Fraction:
    return fib_k_negative_diagonal(n, 3)


_TERM = re.compile(
    r"""^\s*(?:(?P<c>[-+]?\d+(?:/\d+)?)\s*\*\s*)?
        x\^(?P<s>\d+)\s*/\s*\(\s*1\s*-\s*(?P<r>[-+]?\d+(?:/\d+)?)\s*\*\s*x\s*\)\s*\^\s*(?P<m>\d+)\s*$""",
    re.VERBOSE,
)


def parse_gf(text: str) -> RationalGF:
    """Parse ``"x^s/(1-r*x)^m + ..."``, each term optionally prefixed by ``c*``."""
    total = RationalGF(())
    pieces = re.split(r"\+(?![^()]*\))", text)
    for piece in pieces:
        match = _TERM.match(piece)
        if not match:
            raise ValueError(f"cannot parse generating-function term {piece.strip()!r}")
        total = total + RationalGF.geometric(
            int(match["s"]), Fraction(match["r"]), int(match["m"]), Fraction(match["c"] or 1)
        )
    return total
