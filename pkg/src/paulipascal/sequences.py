"""Order-k Fibonacci numbers and their Pauli variants.

Order ``k`` means ``F(n) = F(n-1) + k*F(n-2)``: ``k = 1`` gives the Fibonacci
numbers, ``k = 2`` the Jacobsthal numbers.  The recurrence runs backwards for
negative ``n``, where the values become rationals.

The Pauli sequences read off the anticommutative triangles sample the ordinary
sequence at half indices: ``P(2m) = F(m)`` and ``P(2m+1) = F(m+2)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graded import Mode
from .hyperpyramid import LayerSpec, compositions, layer, multinomial
from .quadratic import QuadraticNumber

# anticommutative diagonal n is the Pauli number of index n + PAULI_DIAGONAL_OFFSET
PAULI_DIAGONAL_OFFSET = 0

DIAGONAL_MAX_K = 64
PAULI_DIAGONAL_MAX_K = 7


@dataclass(frozen=True)
class SequenceKind:
    order: int = 1
    pauli: bool = False

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")

    def __call__(self, n: int) -> Fraction:
        return pauli_fib_k(n, self.order) if self.pauli else fib_k(n, self.order)


@lru_cache(maxsize=None)
def _fib_positive(k: int, n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, b + k * a
    return a


def fib_k(n: int, k: int = 1) -> Fraction:
    if k < 1:
        raise ValueError("order k must be >= 1")
    if n >= 0:
        return Fraction(_fib_positive(k, n))
    hi, lo = Fraction(1), Fraction(0)
    for _ in range(-n):
        hi, lo = lo, (hi - lo) / k
    return lo


def binet_k(n: int, k: int = 1) -> Fraction:
    """``(q1**n - q2**n) / sqrt(1+4k)`` evaluated exactly in Q(sqrt(1+4k))."""
    if k < 1:
        raise ValueError("order k must be >= 1")
    root = QuadraticNumber.sqrt(1 + 4 * k)
    q1 = (1 + root) / 2
    q2 = (1 - root) / 2
    value = (q1 ** n - q2 ** n) / root
    if not value.is_rational():
        raise ArithmeticError(f"irrational part {value.b} survived for n={n}, k={k}")
    return value.a


def negative_index_identity_check(n: int, k: int = 1) -> bool:
    """``F(-n) == (-1)**(n-1) * F(n) / k**n``, i.e. ``-F(n) / (-k)**n``."""
    return fib_k(-n, k) == -fib_k(n, k) / Fraction(-k) ** n


def pauli_fib_k(n: int, k: int = 1) -> Fraction:
    return fib_k(n // 2, k) if n % 2 == 0 else fib_k((n + 3) // 2, k)


def pauli_fib(n: int) -> Fraction:
    return pauli_fib_k(n, 1)


def pauli_jacobsthal(n: int) -> Fraction:
    return pauli_fib_k(n, 2)


def binet_float(n: int, k: int = 1) -> float:
    s = math.sqrt(1 + 4 * k)
    return ((0.5 + s / 2) ** n - (0.5 - s / 2) ** n) / s


RESIDUE_TOL = 1e-9


def _real(z: complex, what: str) -> float:
    if abs(z.imag) > RESIDUE_TOL * max(1.0, abs(z.real)):
        raise ArithmeticError(f"{what}: imaginary residue {z.imag:.3g}")
    return z.real


def _split_part(n: int, k: int) -> complex:
    s = math.sqrt(1 + 4 * k)
    r1 = cmath.sqrt((1 + s) / 2)
    r2 = cmath.sqrt((1 - s) / 2)
    return (r1 ** n + (-r1) ** n - r2 ** n - (-r2) ** n) / (2 * s)


def pauli_fib_k_split_complex(n: int, k: int = 1) -> complex:
    """Sum of the two half-root Binet parts, one for each parity of ``n``.

    ``(sqrt(q)**n + (-sqrt(q))**n) / 2`` keeps even ``n`` only, so the part at
    ``n`` covers the even indices and the part at ``n + 3`` the odd ones.
    """
    return _split_part(n, k) + _split_part(n + 3, k)


def pauli_fib_k_split(n: int, k: int = 1) -> float:
    return _real(pauli_fib_k_split_complex(n, k), f"split form at n={n}")


def pauli_fib_whole_complex(n: int) -> complex:
    """Whole-formula Binet variant with a cosine-modulated exponent.

    The exponent is integral for every integer ``n``; should rounding ever
    leave it fractional, the split form is used instead.
    """
    e = (2 * n + 3 + 3 * math.cos(math.pi * (n - 1))) / 4
    if abs(e - round(e)) > 1e-12:
        return pauli_fib_k_split_complex(n, 1)
    phi = (1 + math.sqrt(5)) / 2
    psi = (1 - math.sqrt(5)) / 2
    return (complex(phi) ** e - complex(psi) ** e) / math.sqrt(5)


def pauli_fib_closed(n: int) -> float:
    return _real(pauli_fib_whole_complex(n), f"whole form at n={n}")


def pauli_jacobsthal_complex(n: int) -> complex:
    r2 = math.sqrt(2)
    r8 = math.sqrt(8)
    return ((1 + r8) * r2 ** n + (1 - r8) * (-r2) ** n - (1 - 1j) * 1j ** n - (1 + 1j) * (-1j) ** n) / 6


def pauli_jacobsthal_closed(n: int) -> float:
    return _real(pauli_jacobsthal_complex(n), f"Jacobsthal closed form at n={n}")


def pauli_fib3_closed(n: int) -> float:
    return pauli_fib_k_split(n, 3)


def _diagonal_points(n: int, k: int):
    """Multi-indices ``m`` of dimension ``k+1`` with ``m1 + 2*(m2+...) == n-1``."""
    for s in range((n - 1) // 2 + 1):
        for rest in compositions(s, k):
            yield (n - 1 - 2 * s, *rest)


def fib_from_diagonals(n: int, k: int = 1, mode: Mode | str = Mode.COMMUTATIVE) -> int:
    """Diagonal sum through the layers of the ``(k+1)``-dimensional pyramid.

    Commutative diagonals give ``fib_k(n, k)``; anticommutative diagonals give
    ``pauli_fib_k(n + PAULI_DIAGONAL_OFFSET, k)``.
    """
    if n < 1:
        raise ValueError("diagonals are indexed from n = 1")
    mode = Mode.parse(mode)
    if mode is Mode.COMMUTATIVE:
        if k > DIAGONAL_MAX_K:
            raise ValueError(f"k={k} above the supported {DIAGONAL_MAX_K}")
        return sum(multinomial(sum(m), m) for m in _diagonal_points(n, k))
    if k > PAULI_DIAGONAL_MAX_K:
        raise ValueError(f"anticommutative diagonals need k <= {PAULI_DIAGONAL_MAX_K}")
    total = Fraction(0)
    for m in _diagonal_points(n, k):
        total += _pauli_layer(k + 1, sum(m))[m]
    return int(total)


@lru_cache(maxsize=256)
def _pauli_layer(dim: int, n: int):
    return layer(LayerSpec(dim, n, Mode.ANTICOMMUTATIVE))


def calibrate_pauli_offset(k: int, n_max: int = 16, search: int = 4) -> int:
    """Find the index shift mapping anticommutative diagonals onto ``pauli_fib_k``."""
    hits = [
        d for d in range(-search, search + 1)
        if all(fib_from_diagonals(n, k, Mode.ANTICOMMUTATIVE) == pauli_fib_k(n + d, k)
               for n in range(1, n_max + 1))
    ]
    if len(hits) != 1:
        raise ArithmeticError(f"no unique diagonal offset for k={k}: {hits}")
    return hits[0]


def friendly_squares(m: int) -> tuple[int, tuple[Fraction, Fraction]]:
    """Order ``k`` whose discriminant ``1+4k`` equals the odd square ``m**2``."""
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be a positive odd integer")
    k = (m + 1) // 2 * ((m - 1) // 2)
    assert 1 + 4 * k == m * m
    return k, (Fraction(1 + m, 2), Fraction(1 - m, 2))
