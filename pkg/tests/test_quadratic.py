import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mosaicforest.quadratic import (
    QuadraticNumber,
    is_perfect_square,
    order_of_magnitude,
    square_free_split,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=40
)
radicands = st.sampled_from([2, 3, 5, 12, 21, 1932, 9212])


def qn(x, y, d):
    return QuadraticNumber(x, y, d)


@given(rationals, rationals, rationals, rationals, radicands)
def test_field_axioms(x1, y1, x2, y2, d):
    a = qn(x1, y1, d)
    b = qn(x2, y2, d)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + 1) == a * b + a
    assert (a - b) + b == a
    if b:
        assert (a / b) * b == a


@given(rationals, rationals, radicands)
def test_sign_agrees_with_float(x, y, d):
    v = qn(x, y, d)
    approx = float(x) + float(y) * math.sqrt(d)
    if abs(approx) > 1e-9:
        assert v.sign() == (1 if approx > 0 else -1)


@given(rationals, rationals, radicands)
def test_floor(x, y, d):
    v = qn(x, y, d)
    n = math.floor(v)
    assert v >= n
    assert v < n + 1


def test_rational_collapse_and_equality():
    assert qn(3, 0, 12) == Fraction(3)
    assert qn(Fraction(1, 2), 0, 7) == Fraction(1, 2)
    assert QuadraticNumber(2) + QuadraticNumber(0, 1, 3) == qn(2, 1, 3)
    # sqrt(12) == 2*sqrt(3) across different radicands
    assert QuadraticNumber.sqrt(12) == qn(0, 2, 3)
    assert hash(QuadraticNumber.sqrt(12)) == hash(qn(0, 2, 3))
    assert qn(1, 1, 2) != qn(1, 1, 3)


def test_normalized():
    v = qn(2, Fraction(1, 2), 12).normalized()
    assert (v.x, v.y, v.d) == (Fraction(2), Fraction(1), 3)
    assert str(qn(2, Fraction(1, 2), 12)) == "2 + sqrt(3)"
    assert str(qn(Fraction(5, 2), Fraction(-5, 6), 3)) == "5/2 - 5/6*sqrt(3)"


def test_mixed_radicand_arithmetic_rejected():
    with pytest.raises(ValueError):
        qn(1, 1, 2) + qn(1, 1, 3)
    with pytest.raises(ValueError):
        qn(1, 1, 2) < qn(1, 1, 3)


def test_square_radicand_rejected():
    with pytest.raises(ValueError):
        qn(0, 1, 9)
    with pytest.raises(ValueError):
        qn(0, 1, 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        qn(1, 1, 3) / qn(0, 0, 3)


def test_powers():
    z = qn(2, 1, 3)
    assert z**0 == 1
    assert z**2 == qn(7, 4, 3)
    assert z**-1 == qn(2, -1, 3)  # conjugate, since the norm is 1
    assert z**5 * z**-5 == 1


def test_decimal_rendering():
    root3 = QuadraticNumber.sqrt(3)
    assert root3.decimal(6) == "1.732051"
    assert (2 + root3).decimal(6) == "3.732051"
    assert (-root3).decimal(3) == "-1.732"
    assert QuadraticNumber(Fraction(1, 4)).decimal(1) == "0.2"  # half-even ties
    assert QuadraticNumber(Fraction(3, 4)).decimal(1) == "0.8"
    assert QuadraticNumber(Fraction(-1, 8)).decimal(2) == "-0.12"
    assert QuadraticNumber(0).decimal(4) == "0.0000"
    # 150-digit rendering stays exact: check against a published-precision square root
    assert root3.decimal(30) == "1.732050807568877293527446341506"


def test_decimal_never_negative_zero():
    tiny = qn(0, Fraction(-1, 10**9), 2)
    assert tiny.decimal(3) == "0.000"


def test_order_of_magnitude():
    assert order_of_magnitude(Fraction(1, 1000)) == -3
    assert order_of_magnitude(Fraction(999, 1000)) == -1
    assert order_of_magnitude(1) == 0
    assert order_of_magnitude(QuadraticNumber.sqrt(2) / 10**7) == -7
    assert order_of_magnitude(Fraction(4023, 10**6)) == -3
    with pytest.raises(ValueError):
        order_of_magnitude(0)


def test_square_free_split():
    assert square_free_split(12) == (2, 3)
    assert square_free_split(9) == (3, 1)
    assert square_free_split(30) == (1, 30)
    assert is_perfect_square(144)
    assert not is_perfect_square(145)


def test_nonsquare_radicand_family():
    # trace**2 - 4 is strictly between (trace-1)**2 and trace**2 for trace >= 3
    for c in range(3, 200):
        assert not is_perfect_square(c * c - 4)


def test_comparisons_total_order():
    z1 = qn(2, 1, 3)
    z2 = qn(2, -1, 3)
    assert z2 < 1 < z1
    assert z1 > Fraction(37, 10)
    assert z1 < Fraction(38, 10)
    assert abs(z2) == z2
    assert sorted([z1, z2, QuadraticNumber(1)]) == [z2, QuadraticNumber(1), z1]
