from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from casoratia.exact import ONE, I, QBase, gq
from casoratia.poly import (
    EtaKind,
    EtaPoly,
    Kind,
    KindMismatch,
    MissingQBase,
    NotDivisible,
    NotInEtaImage,
    RatFunc,
    RingPoly,
    exact_div,
    from_eta_basis,
    poly_gcd,
    proportional,
    shift_substitute,
    star_conjugate,
    to_eta_basis,
)

from strategies import gaussian, half_shifts, kinds, nonzero_gaussian, qbases, ring_polys

A, M = Kind.ADDITIVE, Kind.MULTIPLICATIVE
X = RingPoly.var(A)
Z = RingPoly.var(M)
ZI = RingPoly.monomial(M, -1)


def add(*coeffs):
    return RingPoly.from_coeffs(A, coeffs)


def test_arith_examples():
    assert (X + 1) * (X - 1) == add(-1, 0, 1)
    assert (Z + ZI) + RingPoly.zero(M) == Z + ZI
    assert (X * X).scale(Fraction(1, 2)) == add(0, 0, Fraction(1, 2))
    with pytest.raises(KindMismatch):
        X + Z


def test_shift_examples():
    assert shift_substitute(X * X, Fraction(1, 2)) == add(Fraction(-1, 4), I, 1)
    assert shift_substitute(Z, 1, QBase(Fraction(1, 2))) == Z.scale(16)
    p = X ** 3 + X
    assert shift_substitute(p, 0) == p
    with pytest.raises(MissingQBase):
        shift_substitute(Z, 1)


def test_star_examples():
    assert star_conjugate(X.scale(I) + 2) == X.scale(-I) + 2
    assert star_conjugate(Z.scale(gq(1, 1))) == ZI.scale(gq(1, -1))


def test_exact_div_examples():
    assert exact_div(add(-1, 0, 1), X - 1) == X + 1
    assert exact_div(Z * Z - ZI * ZI, Z - ZI) == Z + ZI
    with pytest.raises(NotDivisible) as info:
        exact_div(add(1, 0, 1), X + 1)
    assert not info.value.remainder.is_zero()


def test_eta_examples():
    assert to_eta_basis(X ** 4 + (X * X).scale(2), EtaKind.X2) == EtaPoly.from_coeffs(EtaKind.X2, [0, 2, 1])
    half = Fraction(1, 2)
    assert to_eta_basis((Z + ZI).scale(half), EtaKind.COS) == EtaPoly.from_coeffs(EtaKind.COS, [0, 1])
    assert to_eta_basis((Z * Z + ZI * ZI).scale(half), EtaKind.COS) == EtaPoly.from_coeffs(EtaKind.COS, [-1, 0, 2])
    with pytest.raises(NotInEtaImage):
        to_eta_basis(X ** 3, EtaKind.X2)
    with pytest.raises(NotInEtaImage):
        to_eta_basis(Z, EtaKind.COS)


def test_proportional_examples():
    ok, r = proportional(add(4, 0, 2), add(2, 0, 1))
    assert ok and r == 2
    assert proportional(X + 1, X - 1) == (False, None)
    assert proportional(RingPoly.zero(A), RingPoly.zero(A)) == (True, None)
    assert proportional(X, RingPoly.zero(A))[0] is False


def test_ratfunc_examples():
    inv_x = RatFunc(RingPoly.const(ONE, A), X)
    assert inv_x + inv_x == RatFunc(RingPoly.const(2, A), X)
    f = RatFunc(RingPoly.const(I, A), X - I)
    assert f.star() == RatFunc(RingPoly.const(-I, A), X + I)
    p, q = X * X + 3, X - 2
    assert RatFunc(p, q) == RatFunc(p.scale(5), q.scale(5))
    with pytest.raises(ZeroDivisionError):
        inv_x / RatFunc(RingPoly.zero(A))


def test_ratfunc_canonical_forms():
    f = RatFunc((X - 1) * (X + 2), (X - 1).scale(3))
    assert f.den == RingPoly.const(ONE, A) and f.num == (X + 2).scale(Fraction(1, 3))
    g = RatFunc(Z * (Z + 2), (Z * Z + Z).scale(4))
    assert g.den.coeff(0) == ONE


@given(kinds.flatmap(lambda k: ring_polys(k)), half_shifts, qbases)
def test_shift_inverse(p, c, qb):
    assume(abs(c) <= 5)
    assert shift_substitute(shift_substitute(p, c, qb), -c, qb) == p


@given(kinds.flatmap(lambda k: st.tuples(ring_polys(k), ring_polys(k))))
def test_star_multiplicative(pq):
    p, q = pq
    assert star_conjugate(p * q) == star_conjugate(p) * star_conjugate(q)
    assert star_conjugate(star_conjugate(p)) == p


@given(kinds.flatmap(lambda k: st.tuples(ring_polys(k), ring_polys(k, allow_zero=False))))
@settings(max_examples=500)
def test_exact_div_roundtrip(pd):
    p, d = pd
    assume(not d.is_zero())
    assert exact_div(p * d, d) == p


@given(st.sampled_from(list(EtaKind)), st.lists(gaussian, min_size=1, max_size=11))
def test_eta_roundtrip(eta, coeffs):
    e = EtaPoly.from_coeffs(eta, coeffs)
    assert to_eta_basis(from_eta_basis(e), eta) == e


@given(kinds.flatmap(lambda k: st.tuples(ring_polys(k, allow_zero=False), ring_polys(k, allow_zero=False))),
       nonzero_gaussian, nonzero_gaussian)
def test_proportional_relation(pq, a, b):
    p, q = pq
    assume(not p.is_zero() and not q.is_zero())
    assert proportional(p, p)[0]
    ok, r = proportional(p.scale(a), p)
    assert ok and r == a
    assert proportional(p, q)[0] == proportional(q, p)[0]
    assert proportional(p.scale(a), q.scale(b))[0] == proportional(p, q)[0]


@given(kinds.flatmap(lambda k: st.tuples(ring_polys(k), ring_polys(k), ring_polys(k))))
def test_ring_axioms(pqr):
    p, q, r = pqr
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == RingPoly.zero(p.kind)


@given(ring_polys(A, 3), ring_polys(A, 3, allow_zero=False), ring_polys(A, 3, allow_zero=False))
def test_gcd_divides(p, q, g):
    assume(g.high > 0)
    h = poly_gcd(p * g, q * g)
    exact_div(p * g, h)
    exact_div(q * g, h)
    exact_div(h, g)


@given(ring_polys(M, 3), gaussian)
def test_evaluation_is_ring_map(p, c):
    assume(c)
    q = p * p + Z
    assert q(c) == p(c) * p(c) + c
