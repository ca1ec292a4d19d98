import math
from fractions import Fraction

import pytest

from paulipascal.graded import Mode
from paulipascal.hyperpyramid import (
    CoefficientTable,
    LayerSpec,
    any_layer,
    compositions,
    gamma_multinomial,
    layer,
    multinomial,
    negative_layer,
    negative_layer_closed,
    pauli_binomial,
)

from reference_expansions import (
    PAULI_PYRAMID,
    PAULI_PYRAMID_NEG,
    PAULI_TRIANGLE,
    PAULI_TRIANGLE_NEG,
    PYRAMID,
    PYRAMID_NEG,
    TRIANGLE,
    TRIANGLE_NEG_A,
    TRIANGLE_NEG_B,
    parse_expansion,
)

A, C = Mode.ANTICOMMUTATIVE, Mode.COMMUTATIVE

ALL_REFERENCE = (TRIANGLE + TRIANGLE_NEG_A + TRIANGLE_NEG_B + PYRAMID + PYRAMID_NEG
                 + PAULI_TRIANGLE + PAULI_TRIANGLE_NEG + PAULI_PYRAMID + PAULI_PYRAMID_NEG)


@pytest.mark.parametrize("row", ALL_REFERENCE, ids=lambda r: f"{r[1][:4]}-d{r[0]}-n{r[2]}-dom{r[3]}")
def test_reference_coefficients(row):
    dim, mode, n, dominant, T, text = row
    table = any_layer(LayerSpec(dim, n, mode, dominant, T))
    for key, value in parse_expansion(text, dim).items():
        assert table[key] == value, key


@pytest.mark.parametrize("row", TRIANGLE + PYRAMID + PAULI_TRIANGLE + PAULI_PYRAMID,
                         ids=lambda r: f"{r[1][:4]}-d{r[0]}-n{r[2]}")
def test_positive_rows_are_complete(row):
    dim, mode, n, _, _, text = row
    table = layer(LayerSpec(dim, n, mode))
    want = {k: v for k, v in parse_expansion(text, dim).items() if v}
    assert dict(table.items()) == want


def test_compositions_order():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(compositions(4, 3))) == 15


def test_multinomial():
    assert multinomial(4, (2, 1, 1)) == 12
    assert multinomial(0, (0, 0)) == 1
    with pytest.raises(ValueError):
        multinomial(3, (1, 1))
    with pytest.raises(ValueError):
        multinomial(1, (2, -1))


def test_pascal_recurrence():
    for n in range(2, 41):
        row = layer(LayerSpec(2, n, C))
        prev = layer(LayerSpec(2, n - 1, C))
        for j in range(1, n):
            assert row[(n - j, j)] == prev[(n - j, j - 1)] + prev[(n - j - 1, j)]


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_engine_agrees_with_multinomial(dim):
    for n in range(13):
        spec = LayerSpec(dim, n, C)
        assert dict(layer(spec).items()) == dict(layer(spec, via_engine=True).items())


@pytest.mark.parametrize("dim,dominant", [(2, 1), (2, 2), (3, 1), (3, 3), (4, 2)])
def test_negative_layer_closed_form(dim, dominant):
    for n in range(-6, 0):
        spec = LayerSpec(dim, n, C, dominant, 5)
        assert dict(negative_layer(spec).items()) == dict(negative_layer_closed(spec).items())


def test_pauli_binomial_rule():
    for n in range(41):
        row = layer(LayerSpec(2, n, A))
        assert [row[(n - j, j)] for j in range(n + 1)] == [pauli_binomial(n, j) for j in range(n + 1)]


def test_pauli_threefold_structure():
    for n in range(0, 30):
        half = [math.comb(n // 2, i) for i in range(n // 2 + 1)]
        row = [pauli_binomial(n, j) for j in range(n + 1)]
        if n % 2 == 0:
            interleaved = [x for c in half for x in (c, 0)][:-1]
        else:
            interleaved = [x for c in half for x in (c, c)]
        assert row == interleaved


def test_pauli_binomial_range():
    with pytest.raises(ValueError):
        pauli_binomial(3, 4)


@pytest.mark.parametrize("dominant", [1, 2])
def test_negative_surface_is_triangle(dominant):
    for n in range(-6, 0):
        pyramid = negative_layer(LayerSpec(3, n, A, dominant, 6))
        triangle = negative_layer(LayerSpec(2, n, A, dominant, 6))
        face = {k[:2]: v for k, v in pyramid.items() if k[2] == 0}
        assert face == dict(triangle.items())


def _gamma_numeric(n, parts, h=1e-6):
    neg = [i for i, p in enumerate(parts) if p < 0][0]
    value = math.gamma(n + 1 + h) / math.gamma(parts[neg] + 1 + h)
    for i, p in enumerate(parts):
        if i != neg:
            value /= math.gamma(p + 1)
    return value


@pytest.mark.parametrize("n,parts", [
    (-1, (0, -1, 0, 0)), (-1, (0, -2, 1, 0)), (-1, (0, -3, 1, 1)), (-1, (0, -5, 2, 2)),
    (-2, (1, -3, 0, 0)), (-3, (0, -5, 2, 0)), (-4, (2, -7, 1, 0)), (-2, (-2, 0)),
    (0, (1, -1, 0, 0)),
])
def test_gamma_multinomial_against_numeric_gamma(n, parts):
    exact = gamma_multinomial(n, parts)
    if n >= 0:
        assert exact == 0
        return
    approx = _gamma_numeric(n, parts)
    assert abs(approx - float(exact)) <= 1e-3 * abs(float(exact))


def test_gamma_multinomial_first_entries():
    row = [gamma_multinomial(-1, (0, -1 - s, j, s - j)) for s in range(5) for j in range(s, -1, -1)]
    assert row == [1, -1, -1, 1, 2, 1, -1, -3, -3, -1, 1, 4, 6, 4, 1]


def test_gamma_multinomial_extends_multinomial():
    for n in range(7):
        for parts in compositions(n, 3):
            assert gamma_multinomial(n, parts) == multinomial(n, parts)


def test_gamma_multinomial_errors():
    with pytest.raises(ValueError):
        gamma_multinomial(-1, (1, 1))
    with pytest.raises(ValueError):
        gamma_multinomial(-2, (-1, -1, 0))


class TestTable:
    def test_spec_validation(self):
        with pytest.raises(ValueError):
            LayerSpec(3, -1, C)
        with pytest.raises(ValueError):
            LayerSpec(3, 2, C, 1, 3)
        with pytest.raises(ValueError):
            LayerSpec(9, 2, C)

    def test_missing_keys_are_zero(self):
        t = layer(LayerSpec(2, 2, A))
        assert t[(1, 1)] == 0
        with pytest.raises(KeyError):
            t[(1, 1, 1)]

    def test_round_trips(self):
        t = negative_layer(LayerSpec(3, -3, A, 1, 4))
        assert CoefficientTable.from_json(t.to_json()) == t
        assert CoefficientTable.from_json(t.to_json()).to_json() == t.to_json()

    def test_csv_layout(self):
        t = layer(LayerSpec(2, 2, C))
        lines = t.to_csv().splitlines()
        assert lines[0] == "e1,e2,numerator,denominator"
        assert "1,1,2,1" in lines

    def test_fractions_survive(self):
        spec = LayerSpec(2, 1, C)
        t = CoefficientTable(spec, {(1, 0): Fraction(1, 3)})
        assert t[(1, 0)] == Fraction(1, 3)
