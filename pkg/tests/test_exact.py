from fractions import Fraction

import pytest
from flint import fmpq
from hypothesis import given, settings
from hypothesis import strategies as st

from casoratia.exact import ONE, ZERO, GaussianRational, I, QBase, gq, pochhammer, q_pochhammer

from strategies import gaussian, nonzero_gaussian, small_q


def test_spec_examples():
    assert gq(1, 1) * gq(1, -1) == 2
    assert gq(Fraction(3, 2), 5).conj() == gq(Fraction(3, 2), -5)
    assert gq(2) / gq(4) == gq(Fraction(1, 2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gq(1, 2) / ZERO


def test_lowest_terms():
    c = GaussianRational(Fraction(4, 8), Fraction(-6, 4))
    assert str(c) == "1/2-3/2i"
    assert c.re.q > 0 and c.im.q > 0


@given(gaussian, gaussian, gaussian)
@settings(max_examples=1000)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(gaussian, gaussian, gaussian)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)


@given(nonzero_gaussian)
def test_inverse(a):
    assert a * a.inverse() == ONE


@given(gaussian)
def test_conj_involution_and_norm(a):
    assert a.conj().conj() == a
    n = a.conj() * a
    assert n.im == 0 and n.re >= 0


@given(gaussian)
def test_parse_roundtrip(a):
    assert GaussianRational.parse(str(a)) == a


def test_parse_forms():
    assert GaussianRational.parse("i") == I
    assert GaussianRational.parse("-i") == -I
    assert GaussianRational.parse("3/2-5/7i") == gq(Fraction(3, 2), Fraction(-5, 7))
    with pytest.raises(ValueError):
        GaussianRational.parse("abc")


def test_pow():
    assert I ** 4 == ONE
    assert gq(2) ** -2 == gq(Fraction(1, 4))


def test_pochhammer_examples():
    assert pochhammer(2, 3) == 24
    assert pochhammer(gq(7, 3), 0) == ONE
    assert pochhammer(-2, 4) == 0


@given(gaussian, st.integers(min_value=0, max_value=12))
def test_pochhammer_recursion(a, k):
    assert pochhammer(a, k + 1) == pochhammer(a, k) * (a + k)


def test_q_pochhammer_examples():
    qb = QBase(Fraction(1, 2))
    q = qb.q
    assert q_pochhammer(gq(5), q, 0) == ONE
    assert q_pochhammer(ONE, q, 3) == 0
    assert q_pochhammer(q ** -2, q, 3) == 0


@given(gaussian, st.integers(min_value=0, max_value=10), st.sampled_from(["1/2", "2/3", "3/5"]))
def test_q_pochhammer_recursion(a, k, s):
    q = QBase(s).q
    assert q_pochhammer(a, q, k + 1) == q_pochhammer(a, q, k) * (1 - a * q ** k)


def test_qbase_powers():
    qb = QBase(Fraction(2, 3))
    assert qb.q == gq(Fraction(16, 81))
    assert qb.power(Fraction(1, 2)) == gq(Fraction(4, 9))
    assert qb.quarter(-1) == gq(Fraction(3, 2))
    assert qb.inverted().s == fmpq(3, 2)
    assert not qb.inverted().is_standard
    with pytest.raises(ValueError):
        qb.power(Fraction(1, 8))
    with pytest.raises(ValueError):
        QBase(1)


@given(small_q, small_q)
def test_mixed_operands(a, b):
    assert gq(a) + b == gq(a + b)
    assert b * gq(a) == gq(a * b)
