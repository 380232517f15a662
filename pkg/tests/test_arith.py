from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from arith import (
    QuadExt,
    as_fraction,
    format_rational,
    normalize_rational,
    parse_rational,
    sign,
    sign_quadext,
    simplify,
    sqrt5,
)
from errors import InvalidInputError

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=30)
quads = st.builds(QuadExt, fractions, fractions)


def test_parse_rational_forms():
    assert parse_rational(" 3/6 ") == Fraction(1, 2)
    assert parse_rational("4") == 4
    assert parse_rational("-2/-4") == Fraction(1, 2)
    assert parse_rational(7) == 7


@pytest.mark.parametrize("text", ["1/0", "abc", "1/2/3", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_rational(text)


def test_format_and_normalize():
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(3) == "3"
    assert normalize_rational(2, -4) == Fraction(-1, 2)
    assert normalize_rational(0, 5) == 0
    with pytest.raises(InvalidInputError):
        normalize_rational(1, 0)


def test_sqrt5_squares_to_five():
    assert sqrt5() * sqrt5() == 5
    assert simplify(sqrt5() * sqrt5()) == Fraction(5)
    assert isinstance(simplify(sqrt5() * sqrt5()), Fraction)


def test_golden_ratio_identity():
    golden = QuadExt(Fraction(-1, 2), Fraction(1, 2))
    assert golden * golden + golden == 1
    assert 0 < golden < 1
    assert (1 + sqrt5()) / 2 * golden == 1


@pytest.mark.parametrize(
    "a, b, expected",
    [(-2, 1, 1), (3, -1, 1), (-3, 1, -1), (2, -1, -1), (0, 0, 0), (0, -1, -1), (5, 0, 1)],
)
def test_sign_examples(a, b, expected):
    assert sign_quadext(QuadExt(a, b)) == expected


def test_mixed_arithmetic_with_fraction():
    half = Fraction(1, 2)
    assert half + sqrt5() == QuadExt(half, 1)
    assert 1 - sqrt5() == QuadExt(1, -1)
    assert half * sqrt5() == QuadExt(0, half)
    assert half < sqrt5()
    assert Fraction(3) > QuadExt(0, 1)


def test_rational_quadext_hashes_like_fraction():
    assert hash(QuadExt(2, 0)) == hash(Fraction(2))
    assert QuadExt(2, 0) == 2
    assert len({QuadExt(Fraction(1, 3), 0), Fraction(1, 3)}) == 1


def test_as_fraction():
    assert as_fraction(QuadExt(3, 0)) == 3
    with pytest.raises(InvalidInputError):
        as_fraction(sqrt5())


def test_json_codec():
    q = QuadExt(Fraction(1, 8), Fraction(-1, 8))
    assert q.to_json() == {"a": "1/8", "b": "-1/8"}
    assert QuadExt.from_json(q.to_json()) == q
    with pytest.raises(InvalidInputError):
        QuadExt.from_json({"a": "1"})


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        sqrt5() / 0
    with pytest.raises(ZeroDivisionError):
        QuadExt(0, 0).inverse()


@given(quads, quads, quads)
def test_field_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == 0


@given(quads)
def test_inverse(x):
    assume(x != 0)
    assert x * x.inverse() == 1
    assert x / x == 1


@given(quads, quads)
def test_sign_is_multiplicative(x, y):
    assert sign(x * y) == sign(x) * sign(y)


@given(quads)
def test_norm_is_the_conjugate_product(x):
    assert x * x.conjugate == x.norm
    assert sign(x) == -sign(-x)


@given(quads, quads)
def test_order_agrees_with_subtraction(x, y):
    assert (x < y) == (sign(y - x) > 0)
    assert (x == y) == (sign(x - y) == 0)
