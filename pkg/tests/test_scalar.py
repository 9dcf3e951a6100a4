import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycontract.errors import DivisionByZero, IncompatibleFields, ParseError
from polycontract.scalar import FieldSpec, Scalar, format_scalar, parse_scalar, sqrt, squarefree_part

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)


@st.composite
def scalars(draw, d=3):
    return Scalar(draw(fractions), draw(fractions), d)


def test_examples_from_arithmetic():
    assert Scalar(1, 0, 2) * Scalar(1, 0, 2) == 1
    assert Scalar(1, -1, 2) * Scalar(1, 1, 2) == -1
    half = Fraction(1, 2)
    assert Scalar(half, half, 3) + Scalar(half, -half, 3) == 1


def test_sign_examples():
    assert Scalar(1, -1, 2).sign() == -1
    assert Scalar(0, 0, 3).sign() == 0
    assert Scalar(Fraction(-1, 2), Fraction(1, 2), 3).sign() == 1


def test_cmp_examples():
    half = Scalar(Fraction(1, 2))
    assert half < Scalar(0, Fraction(1, 2), 3)
    x = Scalar(Fraction(3, 7), 2, 5)
    assert x == x and not x < x
    # sqrt(2) - 1 < 1/2  <=>  sqrt(2) < 3/2  <=>  2 < 9/4
    assert Scalar(-1, 1, 2) < half


def test_parse_examples():
    x = parse_scalar("1/2+1/2*sqrt(3)")
    assert (x.a, x.b, x.d) == (Fraction(1, 2), Fraction(1, 2), 3)
    y = parse_scalar("-1")
    assert (y.a, y.b, y.d) == (-1, 0, 1)
    assert format_scalar(parse_scalar("3/6")) == "1/2"


@pytest.mark.parametrize(
    "text, canonical",
    [
        ("1-1*sqrt(2)", "1-sqrt(2)"),
        ("-1/2*sqrt(3)", "-1/2*sqrt(3)"),
        ("+2/4", "1/2"),
        ("0*sqrt(5)", "0"),
        ("3+0*sqrt(2)", "3"),
        ("2*sqrt(12)", "4*sqrt(3)"),
        ("sqrt(4)", "2"),
        ("-sqrt(2)", "-sqrt(2)"),
        ("1/3+sqrt(2)", "1/3+sqrt(2)"),
    ],
)
def test_canonical_format(text, canonical):
    assert format_scalar(parse_scalar(text)) == canonical
    assert format_scalar(parse_scalar(canonical)) == canonical


@pytest.mark.parametrize(
    "text, position",
    [("", 0), ("1/0", 2), ("abc", 0), ("1+", 2), ("1+2", 2), ("sqrt(2)+1", 7), ("1*sqrt(3", 8), ("1//2", 2)],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_scalar(text)
    assert info.value.position == position


def test_rational_carries_no_radical():
    x = Scalar(0, 1, 3) * Scalar(0, 1, 3)
    assert x == 3 and x.d == 1 and x.b == 0
    assert Scalar(2, 5, 1) == 7


def test_incompatible_fields():
    with pytest.raises(IncompatibleFields):
        _ = sqrt(2) + sqrt(3)
    # rationals mix with any field
    assert (sqrt(2) + 1) * 2 == Scalar(2, 2, 2)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        _ = sqrt(2) / Scalar(0)
    with pytest.raises(ZeroDivisionError):
        _ = Scalar(1) / 0


def test_field_spec_rejects_square_factors():
    with pytest.raises(ValueError):
        FieldSpec(8)
    assert squarefree_part(72) == (6, 2)


@settings(max_examples=300)
@given(scalars(), scalars(), scalars())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0
    if x:
        assert x * (1 / x) == 1
        assert (y / x) * x == y


@settings(max_examples=300)
@given(scalars(d=2), scalars(d=2))
def test_sign_is_multiplicative(x, y):
    assert (x * y).sign() == x.sign() * y.sign()


@settings(max_examples=300)
@given(scalars(d=5))
def test_canonical_form_idempotent(x):
    again = Scalar(x.a, x.b, x.d)
    assert again == x and hash(again) == hash(x)
    assert parse_scalar(format_scalar(x)) == x
    assert x.a.denominator > 0 and x.b.denominator > 0


def _mp(x):
    return mpmath.mpf(x.a.numerator) / x.a.denominator + mpmath.mpf(x.b.numerator) / x.b.denominator * mpmath.sqrt(x.d)


def test_cmp_agrees_with_128_bit_floats():
    rng = random.Random(20240601)
    with mpmath.workprec(128):
        for _ in range(10_000):
            d = rng.choice([2, 3, 5, 7])
            x = Scalar(Fraction(rng.randint(-99, 99), rng.randint(1, 30)), Fraction(rng.randint(-99, 99), rng.randint(1, 30)), d)
            y = Scalar(Fraction(rng.randint(-99, 99), rng.randint(1, 30)), Fraction(rng.randint(-99, 99), rng.randint(1, 30)), d)
            diff = _mp(x) - _mp(y)
            expected = 0 if diff == 0 else (1 if diff > 0 else -1)
            assert (x - y).sign() == expected
