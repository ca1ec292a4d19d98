"""Cross-oracle verification suites driven by ``paulipascal verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .graded import GradedElement, Mode, power
from .hyperpyramid import LayerSpec, layer, pauli_binomial
from .matrix import matrix_eval
from . import sequences as seq
from . import summation as summ


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    counterexample: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" -- counterexample: {self.counterexample}" if not self.ok else ""
        return f"{status} {self.suite}: {self.name}{tail}"


def _first_failure(cases: Iterator, test: Callable) -> str:
    for case in cases:
        problem = test(case)
        if problem:
            return problem
    return ""


def random_rational(rng: random.Random, span: int = 9) -> Fraction:
    num = rng.randint(-span, span) or 1
    return Fraction(num, rng.randint(1, span))


def suite_matrix_oracle(seed: int) -> list[Check]:
    rng = random.Random(seed)
    out = []
    for mode in Mode:
        def test(case, mode=mode):
            d, n, values = case
            v = GradedElement.vector(d, mode)
            lhs = matrix_eval(power(v, n), values)
            rhs = matrix_eval(v, values) ** n
            return "" if lhs == rhs else f"d={d} n={n} values={values}"

        cases = [
            (d, n, [random_rational(rng) for _ in range(d)])
            for d in (1, 2, 3) for n in range(13) for _ in range(5)
        ]
        problem = _first_failure(cases, test)
        out.append(Check("matrix-oracle", f"{mode.value} powers, d<=3, n<=12", not problem, problem))
    return out


def suite_binet(seed: int) -> list[Check]:
    def binet_case(case):
        n, k = case
        return "" if seq.binet_k(n, k) == seq.fib_k(n, k) else f"n={n} k={k}"

    def identity_case(case):
        n, k = case
        return "" if seq.negative_index_identity_check(n, k) else f"n={n} k={k}"

    p1 = _first_failure(((n, k) for k in range(1, 11) for n in range(-60, 61)), binet_case)
    p2 = _first_failure(((n, k) for k in range(1, 11) for n in range(1, 41)), identity_case)
    return [
        Check("binet-vs-recurrence", "binet_k == fib_k, |n|<=60, k<=10", not p1, p1),
        Check("binet-vs-recurrence", "F(-n) == (-1)^(n-1) F(n) / k^n, n<=40", not p2, p2),
    ]


def suite_diagonals(seed: int) -> list[Check]:
    def plain(case):
        n, k = case
        got = seq.fib_from_diagonals(n, k, Mode.COMMUTATIVE)
        return "" if got == seq.fib_k(n, k) else f"n={n} k={k}: {got}"

    def pauli(case):
        n, k = case
        got = seq.fib_from_diagonals(n, k, Mode.ANTICOMMUTATIVE)
        want = seq.pauli_fib_k(n + seq.PAULI_DIAGONAL_OFFSET, k)
        return "" if got == want else f"n={n} k={k}: {got} != {want}"

    p1 = _first_failure(((n, k) for k in range(1, 5) for n in range(1, 26)), plain)
    p2 = _first_failure(((n, k) for k in (1, 2) for n in range(1, 21)), pauli)
    return [
        Check("diagonal-vs-recurrence", "commutative diagonals == fib_k, n<=25, k<=4", not p1, p1),
        Check("diagonal-vs-recurrence", "anticommutative diagonals == PF/PJ, n<=20", not p2, p2),
    ]


def suite_pauli_binomial(seed: int) -> list[Check]:
    def test(n):
        table = layer(LayerSpec(2, n, Mode.ANTICOMMUTATIVE))
        for j in range(n + 1):
            if table[(n - j, j)] != pauli_binomial(n, j):
                return f"n={n} j={j}: engine {table[(n - j, j)]}, rule {pauli_binomial(n, j)}"
        return ""

    problem = _first_failure(range(41), test)
    return [Check("pauli-binomial-rule", "closed rule matches the engine, n<=40", not problem, problem)]


def suite_divergent(seed: int) -> list[Check]:
    def jac(n):
        got, want = summ.jacobsthal_negative_diagonal(n), seq.binet_k(-n, 2)
        return "" if got == want else f"n={n}: {got} != {want}"

    def fib3(n):
        got, want = summ.fib3_negative_diagonal(n), seq.binet_k(-n, 3)
        return "" if got == want else f"n={n}: {got} != {want}"

    def pj(n):
        got, want = summ.pauli_jacobsthal_negative_diagonal(n), seq.pauli_jacobsthal(-n)
        return "" if got == want else f"n={n}: {got} != {want}"

    p1 = _first_failure(range(1, 9), jac)
    p2 = _first_failure(range(1, 9), fib3)
    p3 = _first_failure((1, 3, 5, 7), pj)
    return [
        Check("divergent-vs-binet", "Jacobsthal diagonals == binet_k(-n, 2), n<=8", not p1, p1),
        Check("divergent-vs-binet", "order-3 gamma diagonals == binet_k(-n, 3), n<=8", not p2, p2),
        Check("divergent-vs-binet", "Pauli Jacobsthal diagonals == PJ(-n), odd n<=7", not p3, p3),
    ]


def suite_friendly_squares(seed: int) -> list[Check]:
    table = [seq.friendly_squares(m)[0] for m in (1, 3, 5, 7, 9, 11)]
    p1 = "" if table == [0, 2, 6, 12, 20, 30] else f"table {table}"

    def test(m):
        k, (q1, q2) = seq.friendly_squares(m)
        ok = 4 * k == m * m - 1 and q1 + q2 == 1 and q1 * q2 == -k
        return "" if ok else f"m={m}"

    p2 = _first_failure(range(1, 100, 2), test)
    return [
        Check("friendly-squares", "k = 0, 2, 6, 12, 20, 30 for m = 1..11", not p1, p1),
        Check("friendly-squares", "k = (m^2-1)/4 with rational roots, odd m<=99", not p2, p2),
    ]


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "binet-vs-recurrence": suite_binet,
    "diagonal-vs-recurrence": suite_diagonals,
    "divergent-vs-binet": suite_divergent,
    "friendly-squares": suite_friendly_squares,
    "matrix-oracle": suite_matrix_oracle,
    "pauli-binomial-rule": suite_pauli_binomial,
}


def run(names: list[str], seed: int = 0) -> list[Check]:
    checks = []
    for name in sorted(names):
        checks.extend(SUITES[name](seed))
    return checks
