"""Tests for Q(sqrt 2) scalars."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from ..scalar import SQRT2, Scalar

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
scalars = st.builds(Scalar, rationals, rationals)


def test_multiplication_rule():
    """Test (r1+s1√2)(r2+s2√2) = (r1r2+2s1s2) + (r1s2+s1r2)√2."""
    product = Scalar(1, 2) * Scalar(3, -1)
    assert product == Scalar(3 - 4, -1 + 6)
    assert SQRT2 * SQRT2 == 2


def test_zero_iff_both_parts_zero():
    """Test truthiness of scalars."""
    assert not Scalar(0, 0)
    assert Scalar(0, 1)
    assert Scalar(Fraction(1, 3))


def test_canonical_fractions_and_json():
    """Test reduced fractions with positive denominators on the wire."""
    value = Scalar(Fraction(2, -4), Fraction(6, 3))
    assert value.to_json() == {"r": "-1/2", "s": "2/1"}
    assert Scalar(0).to_json() == {"r": "0/1", "s": "0/1"}
    assert Scalar.from_json(value.to_json()) == value


def test_comparisons_with_rationals():
    """Test equality and ordering against plain numbers."""
    assert Scalar(3) == 3
    assert hash(Scalar(3)) == hash(3)
    assert Scalar(0, 1) > Scalar(Fraction(141, 100))
    assert Scalar(0, 1) < Scalar(Fraction(142, 100))
    assert Scalar(1, -1) < 0


def test_str():
    """Test human readable forms."""
    assert str(Scalar(0, 1)) == "√2"
    assert str(Scalar(0, -2)) == "-2√2"
    assert str(Scalar(1, -1)) == "1-√2"
    assert str(Scalar(Fraction(1, 2))) == "1/2"


def test_division_by_zero():
    """Test that zero has no inverse."""
    with pytest.raises(ZeroDivisionError):
        Scalar(0).inverse()
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / 0


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    """Test associativity, commutativity and distributivity."""
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(scalars)
def test_inverses(a):
    """Test multiplicative inverses of nonzero elements."""
    assume(a)
    assert a.norm() != 0
    assert a * a.inverse() == 1
    assert a / a == 1


@given(scalars, scalars)
def test_conjugation_is_multiplicative(a, b):
    """Test that the Galois conjugate respects products and norms."""
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a * a.conjugate() == a.norm()
