from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from paulipascal import sequences as seq
from paulipascal.summation import (
    DIVERGENT,
    DiagonalSeries,
    RationalGF,
    abel_sum,
    euler_transform,
    euler_transform_sum,
    fib3_negative_diagonal,
    fib_k_negative_diagonal,
    fit_geometric_family,
    jacobsthal_negative_diagonal,
    parse_gf,
    pauli_jacobsthal_negative_diagonal,
    poly_divmod,
    poly_gcd,
)

F = Fraction


def geo(s=0, r=1, m=1, c=1):
    return RationalGF.geometric(s, r, m, c)


class TestPolynomials:
    def test_divmod(self):
        q, r = poly_divmod((F(-1), F(0), F(1)), (F(-1), F(1)))
        assert q == (F(1), F(1)) and r == ()

    def test_gcd(self):
        g = poly_gcd((F(1), F(2), F(1)), (F(1), F(1)))
        assert g == (F(1), F(1))

    def test_lowest_terms(self):
        gf = RationalGF((F(1), F(1)), (F(1), F(2), F(1)))
        assert gf.denominator == (F(1), F(1))
        assert gf.numerator == (F(1),)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RationalGF((F(1),), ())


class TestGeometricFamily:
    def test_taylor(self):
        assert geo(0, -1, 2).taylor(5) == [1, -2, 3, -4, 5]
        assert geo(2, 3, 1, 2).taylor(5) == [0, 0, 2, 6, 18]

    def test_classical_values(self):
        assert abel_sum(geo(0, -1, 1)) == F(1, 2)
        assert abel_sum(geo(0, -2, 1)) == F(1, 3)
        assert abel_sum(geo(0, -1, 2)) == F(1, 4)
        assert abel_sum(geo(0, -1, 3)) == F(1, 8)

    def test_pole(self):
        with pytest.raises(ZeroDivisionError):
            abel_sum(geo(0, 1, 1))

    def test_fit_round_trip(self):
        for s, r, m, c in [(0, -1, 1, 1), (3, -2, 2, -5), (1, F(1, 3), 4, F(2, 7)), (2, 0, 0, 3)]:
            gf = geo(s, r, m, c)
            assert fit_geometric_family(gf.taylor(16)) == gf

    def test_fit_rejects_outsiders(self):
        with pytest.raises(ValueError):
            fit_geometric_family([1, 1, 2, 3, 5, 8, 13, 21])
        with pytest.raises(ValueError):
            fit_geometric_family([1, 2])

    def test_fit_empty(self):
        assert abel_sum(fit_geometric_family([0] * 8)) == 0


class TestEuler:
    def test_single_step(self):
        assert euler_transform([F(1), F(-1), F(1), F(-1)]) == [F(1, 2), 0, 0, 0]

    @pytest.mark.parametrize("terms,value", [
        ([(-1) ** j for j in range(64)], F(1, 2)),
        ([(-1) ** j * (j + 1) for j in range(64)], F(1, 4)),
        ([(-2) ** j for j in range(64)], F(1, 3)),
        ([1, 2], F(3)),
        ([F(1, 2) ** j for j in range(64)], F(2)),
    ])
    def test_values(self, terms, value):
        assert euler_transform_sum(DiagonalSeries.from_terms(terms)) == value

    def test_divergent(self):
        assert euler_transform_sum(DiagonalSeries.from_terms([3 ** j for j in range(64)])) is DIVERGENT

    def test_bad_steps(self):
        with pytest.raises(ValueError):
            euler_transform_sum(DiagonalSeries.from_terms([1]), max_steps=0)

    @pytest.mark.parametrize("s,r,m", [(0, -1, 1), (0, -1, 2), (0, -1, 3), (1, -1, 2), (0, F(1, 2), 1)])
    def test_agrees_with_abel(self, s, r, m):
        gf = geo(s, r, m)
        terms = gf.taylor(200)
        assert euler_transform_sum(DiagonalSeries(lambda j: terms[j]), window=120) == abel_sum(gf)


class TestDiagonals:
    def test_jacobsthal(self):
        assert [jacobsthal_negative_diagonal(n) for n in (1, 2, 3)] == [F(1, 2), F(-1, 4), F(3, 8)]
        for n in range(1, 9):
            assert jacobsthal_negative_diagonal(n) == seq.binet_k(-n, 2)

    def test_third_order(self):
        assert fib3_negative_diagonal(1) == F(1, 3)
        for n in range(1, 9):
            assert fib3_negative_diagonal(n) == seq.binet_k(-n, 3)

    def test_higher_order(self):
        for k in (4, 5):
            for n in range(1, 5):
                assert fib_k_negative_diagonal(n, k) == seq.fib_k(-n, k)

    def test_pauli_jacobsthal(self):
        assert pauli_jacobsthal_negative_diagonal(1) == 1
        assert pauli_jacobsthal_negative_diagonal(3) == 0
        for n in (1, 3, 5, 7, 9):
            assert pauli_jacobsthal_negative_diagonal(n) == seq.pauli_jacobsthal(-n)

    def test_domains(self):
        with pytest.raises(ValueError):
            jacobsthal_negative_diagonal(0)
        with pytest.raises(ValueError):
            pauli_jacobsthal_negative_diagonal(2)
        with pytest.raises(ValueError):
            fib_k_negative_diagonal(1, 1)


class TestParse:
    def test_terms(self):
        assert abel_sum(parse_gf("x^0/(1--1*x)^1")) == F(1, 2)
        assert abel_sum(parse_gf("x^0/(1+2*x)^1".replace("+", "--"))) == F(1, 3)
        assert parse_gf("2*x^1/(1-3*x)^2") == geo(1, 3, 2, 2)
        assert parse_gf("x^0/(1--1*x)^3 + x^0/(1--1*x)^2") == geo(0, -1, 3) + geo(0, -1, 2)

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_gf("1/(1-x)")


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@st.composite
def gfs(draw):
    total = RationalGF(())
    for _ in range(draw(st.integers(1, 3))):
        r = draw(rationals)
        total = total + geo(draw(st.integers(0, 3)), r, draw(st.integers(0, 3)), draw(rationals))
    return total


def _defined(gf, x0):
    from paulipascal.summation import poly_eval
    return poly_eval(gf.denominator, x0) != 0


@settings(max_examples=200, deadline=None)
@given(gfs(), gfs(), rationals, rationals)
def test_linearity(f, g, alpha, beta):
    if not (_defined(f, 1) and _defined(g, 1)):
        return
    assert abel_sum(alpha * f + beta * g) == alpha * abel_sum(f) + beta * abel_sum(g)


@settings(max_examples=200, deadline=None)
@given(st.fractions(min_value=F(-9, 10), max_value=F(9, 10), max_denominator=10), rationals)
def test_regularity(r, c):
    # a convergent geometric series: Abel value equals the ordinary sum c / (1 - r)
    assert abel_sum(geo(0, r, 1, c)) == c / (1 - r)
    partial = sum(geo(0, r, 1, c).taylor(400))
    assert abs(float(partial - c / (1 - r))) < 1e-12
