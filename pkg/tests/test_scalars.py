from fractions import Fraction

import pytest
from hypothesis import assume, given

from src.algebra.errors import NotInvertibleError, OrderMismatchError, ParseError
from src.algebra.scalars import HSeries, to_rational

from strategies import hseries


@given(hseries(), hseries(), hseries())
def test_multiplication_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(hseries(), hseries())
def test_multiplication_is_commutative(a, b):
    assert a * b == b * a


@given(hseries(), hseries(), hseries())
def test_multiplication_distributes_over_addition(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(hseries())
def test_one_and_zero(a):
    assert a * HSeries.one(3) == a
    assert a + HSeries.zero(3) == a
    assert (a - a).is_zero()


@given(hseries())
def test_invert_when_constant_term_is_nonzero(a):
    assume(a.constant_term != 0)
    assert a * a.invert() == HSeries.one(3)


@given(hseries())
def test_text_form_is_read_back(a):
    assert HSeries.parse(str(a), 3) == a


def test_truncation_drops_high_powers():
    h = HSeries.monomial(1, 1, 3)
    assert h * h == HSeries.monomial(1, 2, 3)
    assert (h * h * h).is_zero()
    assert h.shift(2).is_zero()


def test_valuation_and_coefficients():
    a = HSeries((0, 0, Fraction(5, 2)))
    assert a.valuation() == 2
    assert a.coefficient(2) == Fraction(5, 2)
    assert a.coefficient(7) == 0
    assert HSeries.zero(4).valuation() == 4


def test_text_form():
    assert str(HSeries((1, -1, Fraction(1, 2)))) == '1 - h + 1/2*h^2'
    assert str(HSeries.zero(2)) == '0'
    assert HSeries.parse('-h^2 + 3', 3) == HSeries((3, 0, -1))


def test_parse_reports_position():
    with pytest.raises(ParseError) as error:
        HSeries.parse('1 + x', 3)
    assert error.value.position == 2


def test_mixing_orders_is_an_error():
    with pytest.raises(OrderMismatchError):
        HSeries.one(2) + HSeries.one(3)


def test_invert_without_constant_term():
    with pytest.raises(NotInvertibleError):
        HSeries.monomial(1, 1, 3).invert()


def test_to_rational():
    assert to_rational('3/6') == Fraction(1, 2)
    assert to_rational(4) == Fraction(4)
    with pytest.raises(ParseError):
        to_rational('abc')
    with pytest.raises(ParseError):
        to_rational(True)
