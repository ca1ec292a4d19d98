"""Layers of Pascal and Pauli Pascal triangles, pyramids and hyperpyramids.

A layer is the set of coefficients of ``(g1 + ... + gd)**n`` at fixed ``n``.
For ``n < 0`` the expansion depends on which generator dominates, and only a
truncated part of the (infinite) layer exists; each dominant choice gives one
of the ``d`` negative hyperpyramids.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .graded import MAX_DIM, GradedElement, Mode, power, power_series


@dataclass(frozen=True)
class LayerSpec:
    dim: int
    n: int
    mode: Mode = Mode.COMMUTATIVE
    dominant: int | None = None
    truncation: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode.parse(self.mode))
        if not 2 <= self.dim <= MAX_DIM:
            raise ValueError(f"layer dimension must be in 2..{MAX_DIM}")
        if self.n < 0:
            if self.dominant is None or self.truncation is None:
                raise ValueError("negative layers need a dominant generator and a truncation order")
        elif self.dominant is not None or self.truncation is not None:
            raise ValueError("dominant/truncation only apply to negative layers")
        if self.dominant is not None and not 1 <= self.dominant <= self.dim:
            raise ValueError(f"dominant generator {self.dominant} outside 1..{self.dim}")
        if self.truncation is not None and self.truncation < 0:
            raise ValueError("truncation order must be >= 0")

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "n": self.n,
            "mode": self.mode.value,
            "dominant": self.dominant,
            "truncation": self.truncation,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> LayerSpec:
        return cls(data["dim"], data["n"], data["mode"], data.get("dominant"), data.get("truncation"))


@dataclass(frozen=True)
class CoefficientTable:
    spec: LayerSpec
    entries: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, c in self.entries.items():
            key = tuple(key)
            c = Fraction(c)
            self._check(key)
            if c != 0:
                clean[key] = c
        object.__setattr__(self, "entries", clean)

    def _check(self, key):
        spec = self.spec
        if len(key) != spec.dim or sum(key) != spec.n:
            raise ValueError(f"{key} is not on layer n={spec.n} of dimension {spec.dim}")
        for pos, e in enumerate(key, start=1):
            if spec.n < 0 and pos == spec.dominant:
                if e >= 0:
                    raise ValueError(f"{key}: dominant exponent must be negative")
            elif e < 0:
                raise ValueError(f"{key}: exponent of generator {pos} must be >= 0")

    def __getitem__(self, key: Sequence[int]) -> Fraction:
        key = tuple(key)
        if len(key) != self.spec.dim:
            raise KeyError(key)
        return self.entries.get(key, Fraction(0))

    get = __getitem__

    def __len__(self):
        return len(self.entries)

    def items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.entries.items())

    def support(self) -> Iterator[tuple[int, ...]]:
        """Every lattice point of the layer, zeros included.

        For negative layers this is the part up to the truncation order.
        """
        spec = self.spec
        if spec.n >= 0:
            yield from compositions(spec.n, spec.dim)
            return
        dom = spec.dominant - 1
        for order in range(spec.truncation + 1):
            for rest in compositions(order, spec.dim - 1):
                key = list(rest)
                key.insert(dom, spec.n - order)
                yield tuple(key)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "entries": [[list(k), c.numerator, c.denominator] for k, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> CoefficientTable:
        spec = LayerSpec.from_dict(data["spec"])
        return cls(spec, {tuple(k): Fraction(num, den) for k, num, den in data["entries"]})

    @classmethod
    def from_json(cls, text: str) -> CoefficientTable:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"e{i}" for i in range(1, self.spec.dim + 1)] + ["numerator", "denominator"])
        for key, c in self.items():
            writer.writerow([*key, c.numerator, c.denominator])
        return buf.getvalue()


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographically descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {tuple(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts {tuple(parts)} do not sum to {n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def negative_multinomial(n: int, rest: Sequence[int]) -> int:
    """Commutative coefficient of ``g_dom**(n - sum(rest)) * prod g_i**rest_i`` in ``(g1+...+gd)**n``, ``n < 0``."""
    if n >= 0:
        raise ValueError("negative_multinomial needs n < 0")
    s = sum(rest)
    return (-1) ** s * multinomial(-n - 1 + s, [*rest, -n - 1])


def _vector(spec: LayerSpec) -> GradedElement:
    return GradedElement.vector(spec.dim, spec.mode)


def layer(spec: LayerSpec, via_engine: bool = False) -> CoefficientTable:
    """Coefficients of layer ``n >= 0``.

    Commutative layers come from the multinomial formula unless
    ``via_engine`` asks for the expansion; anticommutative layers are always
    expanded by the engine.
    """
    if spec.n < 0:
        raise ValueError("layer() takes n >= 0; use negative_layer()")
    if spec.mode is Mode.COMMUTATIVE and not via_engine:
        entries = {m: multinomial(spec.n, m) for m in compositions(spec.n, spec.dim)}
        return CoefficientTable(spec, entries)
    return CoefficientTable(spec, power(_vector(spec), spec.n).terms)


def negative_layer(spec: LayerSpec) -> CoefficientTable:
    if spec.n >= 0:
        raise ValueError("negative_layer() takes n < 0; use layer()")
    expansion = power_series(_vector(spec), spec.n, spec.dominant, spec.truncation)
    return CoefficientTable(spec, expansion.terms)


def negative_layer_closed(spec: LayerSpec) -> CoefficientTable:
    """Commutative negative layer from :func:`negative_multinomial` alone."""
    if spec.n >= 0 or spec.mode is not Mode.COMMUTATIVE:
        raise ValueError("closed negative layers are commutative with n < 0")
    table = CoefficientTable(spec)
    dom = spec.dominant - 1
    entries = {}
    for key in table.support():
        rest = key[:dom] + key[dom + 1:]
        entries[key] = negative_multinomial(spec.n, rest)
    return CoefficientTable(spec, entries)


def any_layer(spec: LayerSpec) -> CoefficientTable:
    return layer(spec) if spec.n >= 0 else negative_layer(spec)


def pauli_binomial(n: int, j: int) -> int:
    """Entry ``(n, j)`` of the positive Pauli Pascal triangle.

    Even rows are the binomial row ``n/2`` with zeros interleaved; odd rows
    repeat each entry of row ``(n-1)/2`` twice.
    """
    if not 0 <= j <= n:
        raise ValueError(f"j={j} outside 0..{n}")
    if n % 2 == 0 and j % 2 == 1:
        return 0
    return math.comb(n // 2, j // 2)


def gamma_multinomial(n: int, parts: Sequence[int]) -> Fraction:
    """Multinomial ``n! / prod(parts!)`` continued to negative integers.

    The value is the limit ``h -> 0`` of
    ``Gamma(n+1+h) / (Gamma(p+1+h) * prod of Gamma(q+1) over the other parts)``
    where ``p`` is the one negative part that absorbs the pole of the
    numerator.  With ``n = -1-a`` and ``p = -1-b`` the pole pair reduces to
    ``(-1)**(a-b) * b! / a!``.  Denominators with an unregularised pole make
    the whole value 0, which is what happens for ``n >= 0`` with a negative part.
    """
    parts = tuple(parts)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    negative = [i for i, p in enumerate(parts) if p < 0]
    if n >= 0:
        if negative:
            return Fraction(0)
        return Fraction(multinomial(n, parts))
    if len(negative) != 1:
        raise ValueError(f"cannot pair the pole of Gamma({n + 1}) with parts {parts}")
    paired = parts[negative[0]]
    a, b = -n - 1, -paired - 1
    value = Fraction((-1) ** ((a - b) % 2) * math.factorial(b), math.factorial(a))
    for i, p in enumerate(parts):
        if i != negative[0]:
            value /= math.factorial(p)
    return value
