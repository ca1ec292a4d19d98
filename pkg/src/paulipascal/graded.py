"""Exact sparse algebra over ``d`` formal generators.

An element is a sparse map from exponent tuples to :class:`~fractions.Fraction`
coefficients.  A key ``(e1, ..., ed)`` stands for the normal-ordered word
``g1**e1 * g2**e2 * ... * gd**ed``.  In anticommutative mode distinct
generators anticommute while ``g_i**2`` is central (the Pauli relations
``s_i s_j = -s_j s_i`` and ``s_i**2 = 1``), so multiplying two words only
picks up a sign from the transpositions needed to restore normal order.

Generators are numbered from 1, like the letters ``a, b, c, ...`` they replace.

Laurent elements carry a dominant generator whose exponent may be negative, and
a truncation order ``T``: terms whose non-dominant total degree exceeds ``T``
are discarded.  That degree is exactly the correction order of a term relative
to the leading dominant power, e.g. in ``(a+b)**-1 = a**-1 - a**-2 b + ...``.
"""
from __future__ import annotations

import enum
import json
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

MAX_DIM = 8

MultiIndex = tuple[int, ...]


class Mode(str, enum.Enum):
    COMMUTATIVE = "commutative"
    ANTICOMMUTATIVE = "anticommutative"

    @classmethod
    def parse(cls, value: str | Mode) -> Mode:
        if isinstance(value, Mode):
            return value
        aliases = {"plain": cls.COMMUTATIVE, "pauli": cls.ANTICOMMUTATIVE}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise ValueError(f"unknown commutation mode {value!r}") from None


class Laurent(NamedTuple):
    dominant: int
    truncation: int


class AlgebraError(ValueError):
    pass


def normal_order_sign(left: Sequence[int], right: Sequence[int], mode: Mode | str) -> int:
    """Sign from moving the generators of ``right`` leftwards past ``left``.

    Each generator ``g_q`` of the right word has to pass every generator
    ``g_p`` with ``p > q`` of the left word; in anticommutative mode every such
    swap contributes a factor ``-1``.  Negative exponents count by parity, as
    ``g**-1`` is proportional to ``g``.
    """
    if len(left) != len(right):
        raise AlgebraError(f"dimension mismatch: {len(left)} vs {len(right)}")
    if Mode.parse(mode) is Mode.COMMUTATIVE:
        return 1
    return -1 if _swap_parity(left, right) else 1


def _swap_parity(left: Sequence[int], right: Sequence[int]) -> int:
    parity = 0
    suffix = 0
    for q in range(len(left) - 1, -1, -1):
        parity ^= right[q] & suffix & 1
        suffix ^= left[q] & 1
    return parity


class GradedElement:
    """Immutable sparse element of the graded algebra."""

    __slots__ = ("dim", "mode", "laurent", "_terms", "_hash")

    def __init__(
        self,
        dim: int,
        mode: Mode | str,
        terms: Mapping[Sequence[int], object] | Iterable[tuple[Sequence[int], object]] = (),
        laurent: Laurent | tuple[int, int] | None = None,
    ):
        if not 1 <= dim <= MAX_DIM:
            raise AlgebraError(f"dimension must be in 1..{MAX_DIM}, got {dim}")
        self.dim = dim
        self.mode = Mode.parse(mode)
        if laurent is not None:
            laurent = Laurent(*laurent)
            if not 1 <= laurent.dominant <= dim:
                raise AlgebraError(f"dominant generator {laurent.dominant} outside 1..{dim}")
            if laurent.truncation < 0:
                raise AlgebraError("truncation order must be >= 0")
        self.laurent = laurent
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[MultiIndex, Fraction] = {}
        for key, coeff in items:
            key = tuple(int(e) for e in key)
            self._check_key(key)
            if laurent is not None and self._excess(key):
                continue
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._hash = None

    def _check_key(self, key: MultiIndex) -> None:
        if len(key) != self.dim:
            raise AlgebraError(f"multi-index {key} does not have length {self.dim}")
        dom = None if self.laurent is None else self.laurent.dominant - 1
        for pos, e in enumerate(key):
            if e < 0 and pos != dom:
                raise AlgebraError(f"negative exponent at generator {pos + 1} in {key}")

    def _excess(self, key: MultiIndex) -> bool:
        return correction_order(key, self.laurent.dominant) > self.laurent.truncation

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, dim, mode, terms, laurent):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.mode = mode
        obj.laurent = laurent
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def one(cls, dim: int, mode: Mode | str, laurent=None) -> GradedElement:
        return cls(dim, mode, {(0,) * dim: 1}, laurent)

    @classmethod
    def zero(cls, dim: int, mode: Mode | str, laurent=None) -> GradedElement:
        return cls(dim, mode, {}, laurent)

    @classmethod
    def generator(cls, i: int, dim: int, mode: Mode | str, coeff=1) -> GradedElement:
        if not 1 <= i <= dim:
            raise AlgebraError(f"generator {i} outside 1..{dim}")
        key = [0] * dim
        key[i - 1] = 1
        return cls(dim, mode, {tuple(key): coeff})

    @classmethod
    def vector(cls, dim: int, mode: Mode | str, coeffs: Sequence | None = None) -> GradedElement:
        """``c1*g1 + ... + cd*gd``; all coefficients 1 by default."""
        coeffs = [1] * dim if coeffs is None else list(coeffs)
        if len(coeffs) != dim:
            raise AlgebraError("need one coefficient per generator")
        terms = {}
        for i, c in enumerate(coeffs):
            key = [0] * dim
            key[i] = 1
            terms[tuple(key)] = c
        return cls(dim, mode, terms)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[MultiIndex, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[MultiIndex, Fraction]]:
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def coefficient(self, key: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    __getitem__ = coefficient

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_even(self) -> bool:
        return all(e % 2 == 0 for key in self._terms for e in key)

    def is_vector(self) -> bool:
        """True for a sum of distinct single generators, each to the first power."""
        return bool(self._terms) and all(sorted(key)[-1] == 1 and sum(key) == 1 for key in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == GradedElement.one(self.dim, self.mode) * other
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.dim == other.dim and self.mode == other.mode and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, self.mode, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"GradedElement({self.dim}, {self.mode.value!r}, {self.format()})"

    def format(self, names: str = "abcdefgh") -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, c in sorted(self._terms.items(), key=lambda kv: _display_order(kv[0])):
            word = "".join(
                names[i] + ("" if e == 1 else f"^{e}") for i, e in enumerate(key) if e != 0
            )
            mag = abs(c)
            text = str(mag) if (mag != 1 or not word) else ""
            parts.append(("-" if c < 0 else "+", text + word))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(f" {s} {t}" for s, t in parts[1:])

    # -- arithmetic -------------------------------------------------------

    def _compatible(self, other: GradedElement) -> Laurent | None:
        if self.dim != other.dim:
            raise AlgebraError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.mode != other.mode:
            raise AlgebraError(f"mode mismatch: {self.mode.value} vs {other.mode.value}")
        a, b = self.laurent, other.laurent
        if a is None or b is None:
            return a or b
        if a.dominant != b.dominant:
            raise AlgebraError("Laurent elements with different dominant generators")
        return Laurent(a.dominant, min(a.truncation, b.truncation))

    def _coerce(self, other) -> GradedElement:
        if isinstance(other, GradedElement):
            return other
        if isinstance(other, (int, Fraction)):
            return GradedElement(self.dim, self.mode, {(0,) * self.dim: other})
        return NotImplemented

    def __add__(self, other) -> GradedElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        laurent = self._compatible(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return GradedElement(self.dim, self.mode, acc, laurent)

    __radd__ = __add__

    def __neg__(self) -> GradedElement:
        return GradedElement._raw(self.dim, self.mode, {k: -c for k, c in self._terms.items()}, self.laurent)

    def __sub__(self, other) -> GradedElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> GradedElement:
        return (-self) + other

    def scale(self, factor) -> GradedElement:
        factor = Fraction(factor)
        if factor == 0:
            return GradedElement._raw(self.dim, self.mode, {}, self.laurent)
        return GradedElement._raw(
            self.dim, self.mode, {k: c * factor for k, c in self._terms.items()}, self.laurent
        )

    def __mul__(self, other) -> GradedElement:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other) -> GradedElement:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> GradedElement:
        return power(self, n)

    def truncate(self, dominant: int, truncation: int) -> GradedElement:
        """Reinterpret as a Laurent element, dropping terms beyond ``truncation``."""
        return GradedElement(self.dim, self.mode, self._terms, Laurent(dominant, truncation))

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "dim": self.dim,
            "mode": self.mode.value,
            "terms": [[list(k), c.numerator, c.denominator] for k, c in self.items()],
        }
        if self.laurent is not None:
            out["laurent"] = {"dominant": self.laurent.dominant, "truncation": self.laurent.truncation}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> GradedElement:
        laurent = data.get("laurent")
        if laurent is not None:
            laurent = Laurent(laurent["dominant"], laurent["truncation"])
        terms = [(tuple(k), Fraction(num, den)) for k, num, den in data["terms"]]
        return cls(data["dim"], data["mode"], terms, laurent)

    @classmethod
    def from_json(cls, text: str) -> GradedElement:
        return cls.from_dict(json.loads(text))


_UNBOUNDED = 1 << 62


def _display_order(key: MultiIndex):
    return tuple(-e for e in key)


def correction_order(key: Sequence[int], dominant: int) -> int:
    """Total degree of the non-dominant generators of ``key``."""
    return sum(key) - key[dominant - 1]


def multiply(x: GradedElement, y: GradedElement, truncate: bool = True) -> GradedElement:
    """Product ``x*y``; Laurent operands truncate to the tighter order.

    With ``truncate=False`` the full product is returned, which is how the
    corrections beyond the truncation order can be inspected.
    """
    laurent = x._compatible(y)
    if laurent is not None and not truncate:
        laurent = Laurent(laurent.dominant, _UNBOUNDED)
    dim = x.dim
    anti = x.mode is Mode.ANTICOMMUTATIVE
    dom = None if laurent is None else laurent.dominant - 1
    limit = None if laurent is None else laurent.truncation
    acc: dict[MultiIndex, Fraction] = {}
    right = list(y._terms.items())
    if limit is not None:
        right_orders = [sum(k) - k[dom] for k, _ in right]
    for lk, lc in x._terms.items():
        if anti:
            # parity of the number of left generators strictly after position q
            after = [0] * dim
            s = 0
            for q in range(dim - 1, -1, -1):
                after[q] = s
                s ^= lk[q] & 1
        lorder = sum(lk) - lk[dom] if limit is not None else 0
        for idx, (rk, rc) in enumerate(right):
            if limit is not None and lorder + right_orders[idx] > limit:
                continue
            key = tuple(a + b for a, b in zip(lk, rk))
            c = lc * rc
            if anti:
                parity = 0
                for q in range(dim):
                    parity ^= rk[q] & after[q]
                if parity & 1:
                    c = -c
            acc[key] = acc.get(key, Fraction(0)) + c
    terms = {k: c for k, c in acc.items() if c != 0}
    return GradedElement._raw(dim, x.mode, terms, laurent)


def power(x: GradedElement, n: int) -> GradedElement:
    if n < 0:
        raise AlgebraError("power() takes n >= 0; use power_series() for negative exponents")
    result = GradedElement.one(x.dim, x.mode, x.laurent)
    base = x
    while n:
        if n & 1:
            result = multiply(result, base)
        n >>= 1
        if n:
            base = multiply(base, base)
    return result


def _leading_split(x: GradedElement, dominant: int):
    dom = dominant - 1
    leading = [(k, c) for k, c in x._terms.items() if correction_order(k, dominant) == 0]
    if not leading:
        raise AlgebraError(f"no pure power of generator {dominant} to expand around")
    if len(leading) > 1:
        raise AlgebraError(f"several pure powers of generator {dominant}; expansion point is ambiguous")
    (key, coeff), = leading
    if key[dom] <= 0:
        raise AlgebraError("dominant term must have a positive exponent")
    return key[dom], coeff


def _neumann_inverse(x: GradedElement, dominant: int, truncation: int) -> GradedElement:
    """``(L + R)**-1 = sum_j (-L**-1 R)**j L**-1`` truncated at ``truncation``."""
    exp, coeff = _leading_split(x, dominant)
    laurent = Laurent(dominant, truncation)
    inv_key = [0] * x.dim
    inv_key[dominant - 1] = -exp
    lead_inv = GradedElement(x.dim, x.mode, {tuple(inv_key): 1 / coeff}, laurent)
    lead_key = tuple(exp if i == dominant - 1 else 0 for i in range(x.dim))
    rest = GradedElement(
        x.dim, x.mode, {k: c for k, c in x._terms.items() if k != lead_key}, laurent
    )
    step = -multiply(lead_inv, rest)
    acc = GradedElement.one(x.dim, x.mode, laurent)
    term = acc
    for _ in range(truncation):
        term = multiply(term, step)
        if not term:
            break
        acc = acc + term
    return multiply(acc, lead_inv)


def inverse_series(x: GradedElement, dominant: int, truncation: int) -> GradedElement:
    """Truncated Laurent expansion of ``x**-1`` around the dominant generator.

    Anticommutative vectors are inverted as ``x * (x*x)**-1``: the square of a
    vector is a sum of central squares, whose inverse is an ordinary geometric
    series.  Even elements and every commutative element go straight through
    the geometric series in ``(x - lead) / lead``.
    """
    if truncation < 0:
        raise AlgebraError("truncation order must be >= 0")
    if not 1 <= dominant <= x.dim:
        raise AlgebraError(f"dominant generator {dominant} outside 1..{x.dim}")
    if x.laurent is not None:
        raise AlgebraError("inverse_series expects a polynomial element")
    if x.mode is Mode.COMMUTATIVE or x.is_even():
        return _neumann_inverse(x, dominant, truncation)
    if not x.is_vector():
        raise AlgebraError("anticommutative inversion supports vectors and even elements only")
    square = multiply(x, x)
    inv_square = _neumann_inverse(square, dominant, truncation)
    return multiply(x.truncate(dominant, truncation), inv_square)


def power_series(x: GradedElement, n: int, dominant: int, truncation: int) -> GradedElement:
    """Truncated Laurent expansion of ``x**n`` for ``n < 0``."""
    if n >= 0:
        raise AlgebraError("power_series() takes n < 0; use power() otherwise")
    m = -n
    if x.mode is Mode.ANTICOMMUTATIVE and x.is_vector():
        inv_square = inverse_series(multiply(x, x), dominant, truncation)
        result = power(inv_square, m // 2)
        if m % 2:
            result = multiply(inverse_series(x, dominant, truncation), result)
        return result
    return power(inverse_series(x, dominant, truncation), m)
