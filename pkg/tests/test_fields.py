from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from streamcalc import QQ, FieldMismatch, FormatError, PrimeField, field_from_spec, is_prime

GF7 = PrimeField(7)
GF101 = PrimeField(101)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gf101_elements = st.integers(min_value=0, max_value=100).map(GF101.from_int)


def test_rational_sum_example():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_additive_identity():
    x = Fraction(7, 3)
    assert x + QQ.zero() == x


def test_gf7_sum_wraps():
    assert GF7.from_int(5) + GF7.from_int(4) == GF7.from_int(2)


def test_inverse_of_rational():
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_multiplicative_identity():
    x = Fraction(-5, 9)
    assert x * QQ.one() == x


def test_gf7_inverse_by_euclid():
    # 3 * 5 = 15 = 2*7 + 1
    inv = GF7.inv(GF7.from_int(3))
    assert inv == GF7.from_int(5)
    assert GF7.from_int(3) * inv == GF7.one()


def test_inversion_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        GF7.inv(GF7.zero())


def test_rationals_stay_in_lowest_terms():
    x = Fraction(4, 8) + Fraction(1, 2)
    assert (x.numerator, x.denominator) == (1, 1)
    y = Fraction(2, -4)
    assert y.denominator > 0 and y.numerator == -1


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(FormatError):
        PrimeField(91)  # 7 * 13


def test_is_prime_desk_scale():
    assert is_prime(2) and is_prime(101) and is_prime(2**31 - 1)
    assert not is_prime(1) and not is_prime(2**32 + 1)


def test_field_mismatch_detected():
    with pytest.raises(FieldMismatch):
        GF7.from_int(1) + GF101.from_int(1)
    with pytest.raises(FieldMismatch):
        GF7.from_int(1) + Fraction(1, 2)


def test_field_from_spec():
    assert field_from_spec("q") == QQ
    assert field_from_spec("gf:7") == GF7
    with pytest.raises(FormatError):
        field_from_spec("gf:10")
    with pytest.raises(FormatError):
        field_from_spec("reals")


def test_scalar_text_round_trip():
    for text in ("-12", "5/6", "0", "7"):
        assert QQ.format(QQ.parse(text)) == text
    assert GF7.parse("-3") == GF7.from_int(4)
    assert GF7.format(GF7.parse("12")) == "5"
    with pytest.raises(FormatError):
        QQ.parse("1.5")
    with pytest.raises(FormatError):
        QQ.parse("1/0")


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * QQ.inv(a) == 1


@given(gf101_elements, gf101_elements, gf101_elements)
def test_prime_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == GF101.zero()
    if a != GF101.zero():
        assert a * GF101.inv(a) == GF101.one()
