import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qpbw.fields import (
    Cyclotomic, FieldDivisionByZero, FieldError, FieldParseError, MixedFieldError, PrimeField,
    RationalFunctions, Rationals, field_from_string, multiplicative_order,
)

Q, RF = Rationals(), RationalFunctions()
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def rf_elements():
    q = RF.gen()
    return st.builds(lambda a, b, k: RF(a) * q ** k + RF(b), fracs, fracs, st.integers(-2, 3))


def cyc_elements(n):
    F = Cyclotomic(n)
    return st.lists(fracs, min_size=1, max_size=6).map(
        lambda cs: sum((F(c) * F.gen() ** i for i, c in enumerate(cs)), F.zero()))


def test_rational_arithmetic():
    assert Q("1/3") + Q("1/6") == Q("1/2")
    assert str(Q(Fraction(2, 3))) == "2/3"


def test_rational_function_inverse():
    q = RF.gen()
    assert q * q ** -1 == 1
    assert (q ** 2 - 1) / (q - 1) == q + 1
    assert str(q ** 2 - 1) == "q^2 - 1"


def test_cyclotomic_square_of_i():
    z = Cyclotomic(4).gen()
    assert z * z == -1
    assert z ** 4 == 1


def test_division_by_zero_is_distinct():
    with pytest.raises(FieldDivisionByZero):
        Q(1) / Q(0)
    with pytest.raises(ZeroDivisionError):
        RF.zero().inverse()


def test_mixed_fields_rejected():
    with pytest.raises(MixedFieldError):
        Q(1) + RF(1)
    with pytest.raises(MixedFieldError):
        Cyclotomic(3).gen() * Cyclotomic(4).gen()


def test_prime_field_string():
    assert str(PrimeField(7)(4)) == "4 mod 7"
    assert PrimeField(7)(3) * PrimeField(7)(5) == 1


@pytest.mark.parametrize("text,kind", [
    ("rationals", Rationals()), ("rational-functions", RF),
    ("cyclotomic(5)", Cyclotomic(5)), ("prime-field(3)", PrimeField(3))])
def test_descriptor_parsing(text, kind):
    assert field_from_string(text) == kind


def test_bad_descriptors():
    with pytest.raises(FieldParseError):
        field_from_string("reals")
    with pytest.raises(FieldError):
        field_from_string("prime-field(4)")


def test_characteristic():
    assert Rationals().characteristic() == 0
    assert PrimeField(3).characteristic() == 3
    assert Cyclotomic(5).characteristic() == 0


def test_orders():
    assert multiplicative_order(Q(1)) == 1
    assert multiplicative_order(Q(-1)) == 2
    assert multiplicative_order(Q(2)) == math.inf
    assert multiplicative_order(Cyclotomic(6).gen()) == 6
    assert multiplicative_order(RF.gen()) == math.inf
    assert multiplicative_order(RF(-1)) == 2
    # -1 lies in Q(z_3) and has order 2 although 2 does not divide 3
    assert multiplicative_order(Cyclotomic(3)(-1)) == 2
    assert multiplicative_order(-Cyclotomic(3).gen()) == 6
    with pytest.raises(FieldError):
        multiplicative_order(Q(0))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15])
def test_order_by_direct_powering(n):
    F = Cyclotomic(n)
    z = F.gen()
    for k in range(1, 2 * n + 1):
        x = z ** k
        t = multiplicative_order(x)
        assert x ** t == 1
        assert all(x ** s != 1 for s in range(1, t))


@pytest.mark.parametrize("l", [2, 3, 5, 7, 11])
def test_prime_field_orders(l):
    F = PrimeField(l)
    for a in range(1, l):
        t = multiplicative_order(F(a))
        assert F(a) ** t == 1 and all(F(a) ** s != 1 for s in range(1, t))


@given(rf_elements(), rf_elements(), rf_elements())
def test_rational_function_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1


@given(cyc_elements(12), cyc_elements(12), cyc_elements(12))
def test_cyclotomic_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1


@given(rf_elements())
def test_rational_function_string_round_trip(a):
    assert RF.parse(str(a)) == a


@given(cyc_elements(5))
def test_cyclotomic_string_round_trip(a):
    assert Cyclotomic(5).parse(str(a)) == a
