"""Registry of the Wilson / Askey-Wilson families and their reductions.

Each family is a frozen ``FamilySpec`` subclass carrying the static data
(kind, parameter shift, sinusoidal coordinate) and the builders for
eigenpolynomials, energies, shift factors, twists and potentials.

Parameter storage in ``ParamPoint.values``:

* W, cdH, cH: the ``a_j`` themselves (cH stores ``a1, a2``; ``a3, a4`` are
  their conjugates).
* MP: ``(a,)``; the angle lives in ``mp_circle = t = tan(phi/2)`` so that
  ``exp(i phi) = ((1 - t^2) + 2 t i) / (1 + t^2)``.
* AW, cdqH, ASC, cbqH: ``a_j = q**lambda_j``; cqH has no parameters.
* cqJ, cqL: the exponents ``alpha`` (and ``beta``).

All multiplicative families carry ``qbase``.  A base-inverted point
(``s > 1``) represents the same family at ``1/q``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from flint import fmpq

from .exact import I, ONE, ZERO, GaussianRational, QBase, pochhammer, q_pochhammer
from .poly import EtaKind, Kind, RatFunc, RingPoly

__all__ = [
    "FamilySpec",
    "ParamPoint",
    "UnknownFamily",
    "CapExceeded",
    "FAMILY_NAMES",
    "family",
    "all_families",
    "sample_params",
    "eigen_poly",
    "pseudo_poly",
    "energy",
    "twist_params",
    "twist_constants",
    "potential",
    "shift_params",
    "r_factor",
    "phi_poly",
    "kappa",
    "forward_factor",
    "backward_factor",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 16

HALF = Fraction(1, 2)


class UnknownFamily(KeyError):
    pass


class CapExceeded(ValueError):
    pass


def _g(value) -> GaussianRational:
    return GaussianRational.coerce(value)


@dataclass(frozen=True)
class ParamPoint:
    """Concrete parameter values for one family."""

    family: str
    values: tuple = ()
    qbase: QBase | None = None
    mp_circle: fmpq | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_g(v) for v in self.values))
        if self.mp_circle is not None and not isinstance(self.mp_circle, fmpq):
            object.__setattr__(self, "mp_circle", fmpq(Fraction(self.mp_circle).numerator, Fraction(self.mp_circle).denominator))

    @property
    def base_inverted(self) -> bool:
        return self.qbase is not None and not self.qbase.is_standard

    def with_values(self, values) -> "ParamPoint":
        return replace(self, values=tuple(values))

    def dump(self) -> dict:
        out = {"values": [str(v) for v in self.values]}
        if self.qbase is not None:
            out["s"] = str(self.qbase.s)
        if self.mp_circle is not None:
            out["t"] = str(self.mp_circle)
        return out

    @classmethod
    def load(cls, family: str, data: dict) -> "ParamPoint":
        from .exact import parse_fraction

        return cls(
            family,
            tuple(GaussianRational.parse(v) for v in data.get("values", [])),
            QBase(parse_fraction(data["s"])) if "s" in data else None,
            parse_fraction(data["t"]) if "t" in data else None,
        )


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

_X = RingPoly.var(Kind.ADDITIVE)
_X2 = _X * _X
_Z = RingPoly.var(Kind.MULTIPLICATIVE)
_ZINV = RingPoly.monomial(Kind.MULTIPLICATIVE, -1)
_ZSUM = _Z + _ZINV


def _series(kind: Kind, n: int, coeff, factor) -> RingPoly:
    """``sum_k coeff(k) * prod_{j<k} factor(j)`` for ``k = 0..n``."""
    acc = RingPoly.zero(kind)
    basis = RingPoly.const(ONE, kind)
    for k in range(n + 1):
        c = coeff(k)
        if c:
            acc = acc + basis.scale(c)
        if k < n:
            basis = basis * factor(k)
    return acc


def _pair_add(a: GaussianRational, j: int) -> RingPoly:
    # (a + j + ix)(a + j - ix)
    c = a + j
    return _X2 + c * c


def _single_add(a: GaussianRational, j: int, sign: int = 1) -> RingPoly:
    # a + j + sign*i*x
    return RingPoly.from_coeffs(Kind.ADDITIVE, [a + j, I * sign])


def _pair_mult(a: GaussianRational) -> RingPoly:
    # (1 - a z)(1 - a / z)
    return RingPoly.const(1 + a * a, Kind.MULTIPLICATIVE) - _ZSUM.scale(a)


def _linear_mult(a: GaussianRational, power: int) -> RingPoly:
    # 1 - a z**power
    return RingPoly.const(ONE, Kind.MULTIPLICATIVE) - RingPoly.monomial(Kind.MULTIPLICATIVE, power, a)


def _add_pochhammer_poly(a: GaussianRational, k: int, sign: int) -> RingPoly:
    """``(a + sign*i*x)_k`` as a polynomial in x."""
    out = RingPoly.const(ONE, Kind.ADDITIVE)
    for j in range(k):
        out = out * _single_add(a, j, sign)
    return out


def _mult_qpochhammer_poly(a: GaussianRational, step: GaussianRational, k: int, power: int) -> RingPoly:
    """``(a z**power ; step)_k`` as a Laurent polynomial."""
    out = RingPoly.const(ONE, Kind.MULTIPLICATIVE)
    c = a
    for _ in range(k):
        out = out * _linear_mult(c, power)
        c = c * step
    return out


def _sin_from_t(t: fmpq) -> GaussianRational:
    return _g(2 * t / (1 + t * t))


def _circle_from_t(t: fmpq) -> GaussianRational:
    d = 1 + t * t
    return GaussianRational._raw((1 - t * t) / d, 2 * t / d)


# ---------------------------------------------------------------------------
# family base
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    name: str
    kind: Kind
    n_params: int
    delta: tuple
    eta_kind: EtaKind
    phi_kind: str
    group: str
    title: str = field(default="", compare=False)

    @property
    def is_multiplicative(self) -> bool:
        return self.kind is Kind.MULTIPLICATIVE

    @property
    def base_inverting_twist(self) -> bool:
        return self.group == "B"

    # -- overridden per family ------------------------------------------------

    def _eigen(self, n: int, p: ParamPoint) -> RingPoly:
        raise NotImplementedError

    def _energy(self, n: int, p: ParamPoint) -> GaussianRational:
        raise NotImplementedError

    def _forward(self, n: int, p: ParamPoint) -> GaussianRational:
        raise NotImplementedError

    def _backward(self, n: int, p: ParamPoint) -> GaussianRational:
        raise NotImplementedError

    def _twist(self, p: ParamPoint) -> ParamPoint:
        raise NotImplementedError

    def _twist_constants(self, p: ParamPoint):
        raise NotImplementedError

    def _potential_parts(self, p: ParamPoint):
        raise NotImplementedError

    def _shift(self, p: ParamPoint, k: int) -> ParamPoint:
        raise NotImplementedError

    def _kappa(self, p: ParamPoint) -> GaussianRational:
        if self.kind is Kind.ADDITIVE:
            return ONE
        return p.qbase.q.inverse()

    def _r_factor(self, j: int, M: int, p: ParamPoint) -> RingPoly:
        raise NotImplementedError

    def _sample(self, rng: random.Random, sbase: fmpq | None) -> ParamPoint:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# Wilson group
# ---------------------------------------------------------------------------


def _rand_positive(rng: random.Random) -> Fraction:
    d = rng.choice((2, 3, 5, 7, 11, 13))
    return Fraction(rng.randint(1, 3 * d), d)


def _generic_additive(values) -> bool:
    if len(set(values)) != len(values):
        return False
    sums = [values[i] + values[j] for i in range(len(values)) for j in range(i + 1, len(values))]
    if len(set(sums)) != len(sums):
        return False
    # integer or half-integer combinations make twisted or shifted series degenerate
    return all((2 * s).denominator != 1 for s in sums) and (2 * sum(values)).denominator != 1


class _AdditiveBase(FamilySpec):
    def _shift(self, p, k):
        vals = [v + Fraction(k) * d for v, d in zip(p.values, self.delta)]
        return p.with_values(vals)

    def _sample_values(self, rng, count):
        while True:
            vals = [_rand_positive(rng) for _ in range(count)]
            if _generic_additive(vals):
                return vals


@dataclass(frozen=True)
class Wilson(_AdditiveBase):
    def _b1(self, p):
        return sum(p.values, ZERO)

    def _eigen(self, n, p):
        a = p.values
        b1 = self._b1(p)
        lows = [a[0] + a[j] for j in (1, 2, 3)]

        def coeff(k):
            c = pochhammer(-n, k) * pochhammer(n + b1 - 1, k) / pochhammer(1, k)
            for low in lows:
                c = c * pochhammer(low + k, n - k)
            return c

        return _series(Kind.ADDITIVE, n, coeff, lambda j: _pair_add(a[0], j))

    def _energy(self, n, p):
        return _g(n) * (n + self._b1(p) - 1)

    def _forward(self, n, p):
        return -self._energy(n, p)

    def _backward(self, n, p):
        return -ONE

    def _twist(self, p):
        return p.with_values([1 - v for v in p.values])

    def _twist_constants(self, p):
        return ONE, -(self._b1(p) - 2)

    def _potential_parts(self, p):
        num = RingPoly.const(ONE, Kind.ADDITIVE)
        for a in p.values:
            num = num * _single_add(a, 0)
        # 2ix(2ix + 1)
        den = RingPoly.from_coeffs(Kind.ADDITIVE, [0, 2 * I]) * RingPoly.from_coeffs(Kind.ADDITIVE, [1, 2 * I])
        return num, den

    def _r_factor(self, j, M, p):
        out = RingPoly.const(ONE, Kind.ADDITIVE)
        for a in p.values:
            c = a - Fraction(M, 2)
            out = out * _add_pochhammer_poly(c, j - 1, 1) * _add_pochhammer_poly(c, M + 1 - j, -1)
        return out

    def _sample(self, rng, sbase):
        return ParamPoint(self.name, self._sample_values(rng, 4))


@dataclass(frozen=True)
class ContinuousDualHahn(_AdditiveBase):
    def _eigen(self, n, p):
        a = p.values
        lows = [a[0] + a[1], a[0] + a[2]]

        def coeff(k):
            c = pochhammer(-n, k) / pochhammer(1, k)
            for low in lows:
                c = c * pochhammer(low + k, n - k)
            return c

        return _series(Kind.ADDITIVE, n, coeff, lambda j: _pair_add(a[0], j))

    def _energy(self, n, p):
        return _g(n)

    def _forward(self, n, p):
        return _g(-n)

    def _backward(self, n, p):
        return -ONE

    def _twist(self, p):
        return p.with_values([1 - v for v in p.values])

    def _twist_constants(self, p):
        return -ONE, -ONE

    def _potential_parts(self, p):
        num = RingPoly.const(ONE, Kind.ADDITIVE)
        for a in p.values:
            num = num * _single_add(a, 0)
        den = RingPoly.from_coeffs(Kind.ADDITIVE, [0, 2 * I]) * RingPoly.from_coeffs(Kind.ADDITIVE, [1, 2 * I])
        return num, den

    def _r_factor(self, j, M, p):
        out = RingPoly.const(ONE, Kind.ADDITIVE)
        for a in p.values:
            c = a - Fraction(M, 2)
            out = out * _add_pochhammer_poly(c, j - 1, 1) * _add_pochhammer_poly(c, M + 1 - j, -1)
        return out

    def _sample(self, rng, sbase):
        return ParamPoint(self.name, self._sample_values(rng, 3))


@dataclass(frozen=True)
class ContinuousHahn(_AdditiveBase):
    def _four(self, p):
        a1, a2 = p.values
        return a1, a2, a1.conj(), a2.conj()

    def _b1(self, p):
        return sum(self._four(p), ZERO)

    def _eigen(self, n, p):
        a1, a2, a3, a4 = self._four(p)
        b1 = a1 + a2 + a3 + a4
        lows = [a1 + a3, a1 + a4]
        pref = I ** n / pochhammer(1, n)

        def coeff(k):
            c = pref * pochhammer(-n, k) * pochhammer(n + b1 - 1, k) / pochhammer(1, k)
            for low in lows:
                c = c * pochhammer(low + k, n - k)
            return c

        return _series(Kind.ADDITIVE, n, coeff, lambda j: _single_add(a1, j))

    def _energy(self, n, p):
        return _g(n) * (n + self._b1(p) - 1)

    def _forward(self, n, p):
        return n + self._b1(p) - 1

    def _backward(self, n, p):
        return _g(n)

    def _twist(self, p):
        return p.with_values([1 - v.conj() for v in p.values])

    def _twist_constants(self, p):
        return ONE, 2 - self._b1(p)

    def _potential_parts(self, p):
        a1, a2 = p.values
        return _single_add(a1, 0) * _single_add(a2, 0), RingPoly.const(ONE, Kind.ADDITIVE)

    def _r_factor(self, j, M, p):
        out = RingPoly.const(ONE, Kind.ADDITIVE)
        h = Fraction(M, 2)
        for a in p.values:
            out = out * _add_pochhammer_poly(a - h, j - 1, 1) * _add_pochhammer_poly(a.conj() - h, M + 1 - j, -1)
        return out

    def _sample(self, rng, sbase):
        return ParamPoint(self.name, self._sample_values(rng, 2))


@dataclass(frozen=True)
class MeixnerPollaczek(_AdditiveBase):
    def _eigen(self, n, p):
        (a,) = p.values
        w = _circle_from_t(p.mp_circle)
        arg = 1 - w.conj() * w.conj()
        pref = w ** n / pochhammer(1, n)

        def coeff(k):
            return pref * pochhammer(-n, k) / pochhammer(1, k) * pochhammer(2 * a + k, n - k) * arg ** k

        return _series(Kind.ADDITIVE, n, coeff, lambda j: _single_add(a, j))

    def _energy(self, n, p):
        return _g(2 * n) * _sin_from_t(p.mp_circle)

    def _forward(self, n, p):
        return 2 * _sin_from_t(p.mp_circle)

    def _backward(self, n, p):
        return _g(n)

    def _twist(self, p):
        # (a, phi) -> (1 - a, pi - phi); tan((pi - phi)/2) = 1/t
        return replace(p, values=(1 - p.values[0],), mp_circle=1 / p.mp_circle)

    def _twist_constants(self, p):
        return -ONE, -2 * _sin_from_t(p.mp_circle)

    def _potential_parts(self, p):
        # exp(i(pi/2 - phi)) (a + ix) = i conj(w) (a + ix)
        w = _circle_from_t(p.mp_circle)
        return _single_add(p.values[0], 0).scale(I * w.conj()), RingPoly.const(ONE, Kind.ADDITIVE)

    def _r_factor(self, j, M, p):
        (a,) = p.values
        w = _circle_from_t(p.mp_circle)
        # exp(2i(phi - pi/2) c) with c = M/2 + 1 - j equals (-i w)**(2c)
        phase = (-I * w) ** (M + 2 - 2 * j)
        c = a - Fraction(M, 2)
        return (_add_pochhammer_poly(c, j - 1, 1) * _add_pochhammer_poly(c, M + 1 - j, -1)).scale(phase)

    def _sample(self, rng, sbase):
        a = _rand_positive(rng)
        while (2 * a).denominator == 1:
            a = _rand_positive(rng)
        t = rng.choice((Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4), Fraction(2, 5), Fraction(3, 5)))
        return ParamPoint(self.name, (a,), mp_circle=fmpq(t.numerator, t.denominator))


# ---------------------------------------------------------------------------
# Askey-Wilson group
# ---------------------------------------------------------------------------

_S_CHOICES = (Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(3, 5), Fraction(2, 5))


def _pick_base(rng: random.Random, sbase) -> QBase:
    if sbase is not None:
        return QBase(sbase)
    return QBase(rng.choice(_S_CHOICES))


def _rand_unit(rng: random.Random) -> fmpq:
    d = rng.choice((3, 5, 7, 11, 13))
    v = fmpq(rng.randint(1, d - 1), d)
    return -v if rng.random() < 0.3 else v


def _mult_r_core(avals, qb: QBase, j: int, M: int) -> RingPoly:
    q = qb.q
    shift = qb.power(-Fraction(M, 2))
    out = RingPoly.monomial(Kind.MULTIPLICATIVE, 2 * (M + 2 - 2 * j))
    for a in avals:
        c = a * shift
        out = out * _mult_qpochhammer_poly(c, q, j - 1, 1) * _mult_qpochhammer_poly(c, q, M + 1 - j, -1)
    return out


class _MultiplicativeBase(FamilySpec):
    def _avals(self, p):
        return p.values

    def _potential_parts(self, p):
        num = RingPoly.const(ONE, Kind.MULTIPLICATIVE)
        for a in self._avals(p):
            num = num * _linear_mult(a, 1)
        den = _linear_mult(ONE, 2) * _linear_mult(p.qbase.q, 2)
        return num, den

    def _shift(self, p, k):
        vals = [v * p.qbase.power(Fraction(k) * d) for v, d in zip(p.values, self.delta)]
        return p.with_values(vals)


@dataclass(frozen=True)
class AskeyWilson(_MultiplicativeBase):
    def _b4(self, p):
        out = ONE
        for a in p.values:
            out = out * a
        return out

    def _eigen(self, n, p):
        a = p.values
        qb = p.qbase
        q = qb.q
        b4 = self._b4(p)
        lows = [a[0] * a[j] for j in (1, 2, 3)]
        pref = a[0] ** (-n)
        qn = q ** (-n)
        top = b4 * q ** (n - 1)

        def coeff(k):
            c = pref * q_pochhammer(qn, q, k) * q_pochhammer(top, q, k) / q_pochhammer(q, q, k) * q ** k
            for low in lows:
                c = c * q_pochhammer(low * q ** k, q, n - k)
            return c

        return _series(Kind.MULTIPLICATIVE, n, coeff, lambda j: _pair_mult(a[0] * q ** j))

    def _energy(self, n, p):
        q = p.qbase.q
        return (q ** (-n) - 1) * (1 - self._b4(p) * q ** (n - 1))

    def _forward(self, n, p):
        return p.qbase.power(Fraction(n, 2)) * self._energy(n, p)

    def _backward(self, n, p):
        return p.qbase.power(Fraction(-n, 2))

    def _twist(self, p):
        q = p.qbase.q
        return p.with_values([q / a for a in p.values])

    def _twist_constants(self, p):
        q = p.qbase.q
        b4 = self._b4(p)
        return b4 * q ** -2, -(1 - q) * (1 - b4 * q ** -2)

    def _r_factor(self, j, M, p):
        return _mult_r_core(p.values, p.qbase, j, M)

    def _sample(self, rng, sbase):
        qb = _pick_base(rng, sbase)
        while True:
            vals = [_rand_unit(rng) * qb.s ** rng.randint(0, 2) for _ in range(4)]
            if len({str(v) for v in vals}) == 4:
                return ParamPoint(self.name, vals, qb)


@dataclass(frozen=True)
class ContinuousQJacobi(_MultiplicativeBase):
    def _ab(self, p):
        return Fraction(int(p.values[0].re.p), int(p.values[0].re.q)), Fraction(int(p.values[1].re.p), int(p.values[1].re.q))

    def _avals(self, p):
        al, be = self._ab(p)
        qb = p.qbase
        return (
            qb.power((al + HALF) / 2),
            qb.power((al + 3 * HALF) / 2),
            -qb.power((be + HALF) / 2),
            -qb.power((be + 3 * HALF) / 2),
        )

    def _eigen(self, n, p):
        al, be = self._ab(p)
        qb = p.qbase
        q = qb.q
        a = qb.power((al + HALF) / 2)
        top = qb.power(n + al + be + 1)
        low1 = qb.power(al + 1)
        low2 = -qb.power((al + be + 1) / 2)
        low3 = -qb.power((al + be + 2) / 2)
        pref = q_pochhammer(q, q, n).inverse()
        qn = q ** (-n)

        def coeff(k):
            c = pref * q_pochhammer(qn, q, k) * q_pochhammer(top, q, k) * q ** k
            c = c / (q_pochhammer(q, q, k) * q_pochhammer(low2, q, k) * q_pochhammer(low3, q, k))
            return c * q_pochhammer(low1 * q ** k, q, n - k)

        return _series(Kind.MULTIPLICATIVE, n, coeff, lambda j: _pair_mult(a * q ** j))

    def _energy(self, n, p):
        al, be = self._ab(p)
        qb = p.qbase
        return (qb.q ** (-n) - 1) * (1 - qb.power(n + al + be + 1))

    def _pair(self, p):
        al, be = self._ab(p)
        qb = p.qbase
        return (1 + qb.power((al + be + 1) / 2)) * (1 + qb.power((al + be + 2) / 2))

    def _forward(self, n, p):
        al, be = self._ab(p)
        qb = p.qbase
        return qb.power((al + 3 * HALF) / 2) * qb.q ** (-n) * (1 - qb.power(n + al + be + 1)) / self._pair(p)

    def _backward(self, n, p):
        al, be = self._ab(p)
        qb = p.qbase
        return qb.power(-(al + 3 * HALF) / 2) * qb.q ** n * (qb.q ** (-n) - 1) * self._pair(p)

    def _twist(self, p):
        return p.with_values([-v for v in p.values])

    def _twist_constants(self, p):
        al, be = self._ab(p)
        qb = p.qbase
        e = qb.power(al + be)
        return e, (qb.q - 1) * (1 - e)

    def _shift(self, p, k):
        return p.with_values([v + Fraction(k) * d for v, d in zip(p.values, self.delta)])

    def _r_factor(self, j, M, p):
        al, be = self._ab(p)
        qb = p.qbase
        half = qb.power(HALF)
        shift = qb.power(-Fraction(M, 2))
        out = RingPoly.monomial(Kind.MULTIPLICATIVE, 2 * (M + 2 - 2 * j))
        for c in (qb.power((al + HALF) / 2) * shift, -qb.power((be + HALF) / 2) * shift):
            out = out * _mult_qpochhammer_poly(c, half, 2 * (j - 1), 1)
            out = out * _mult_qpochhammer_poly(c, half, 2 * (M + 1 - j), -1)
        return out

    def _sample(self, rng, sbase):
        qb = _pick_base(rng, sbase)
        # half-integer alpha keeps alpha + beta off the integers, where the
        # twisted and shifted series collapse
        return ParamPoint(self.name, (rng.randint(0, 2) + HALF, rng.randint(0, 3)), qb)


@dataclass(frozen=True)
class GroupB(_MultiplicativeBase):
    """cdqH, ASC, cbqH, cqH: Askey-Wilson with trailing ``a_j = 0``."""

    def _eigen(self, n, p):
        a = p.values
        qb = p.qbase
        q = qb.q
        qn = q ** (-n)
        m = len(a)
        if m == 0:
            # z**n 2phi0(q^-n, 0; -; q, q^n z^-2)
            out = RingPoly.zero(Kind.MULTIPLICATIVE)
            for k in range(n + 1):
                c = q_pochhammer(qn, q, k) / q_pochhammer(q, q, k)
                c = c * (-1) ** k * q ** (-(k * (k - 1) // 2)) * q ** (n * k)
                out = out + RingPoly.monomial(Kind.MULTIPLICATIVE, n - 2 * k, c)
            return out
        lows = [a[0] * a[j] for j in range(1, m)]
        pref = a[0] ** (-n)

        def coeff(k):
            c = pref * q_pochhammer(qn, q, k) / q_pochhammer(q, q, k) * q ** k
            for low in lows:
                c = c * q_pochhammer(low * q ** k, q, n - k)
            return c

        return _series(Kind.MULTIPLICATIVE, n, coeff, lambda j: _pair_mult(a[0] * q ** j))

    def _energy(self, n, p):
        return p.qbase.q ** (-n) - 1

    def _forward(self, n, p):
        return p.qbase.power(Fraction(n, 2)) * (p.qbase.q ** (-n) - 1)

    def _backward(self, n, p):
        return p.qbase.power(Fraction(-n, 2))

    def _twist(self, p):
        q = p.qbase.q
        return ParamPoint(p.family, [a / q for a in p.values], p.qbase.inverted())

    def _twist_constants(self, p):
        q = p.qbase.q
        return q, q - 1

    def _r_factor(self, j, M, p):
        return _mult_r_core(p.values, p.qbase, j, M)

    def _sample(self, rng, sbase):
        qb = _pick_base(rng, sbase)
        m = self.n_params
        while True:
            vals = [_rand_unit(rng) * qb.s ** rng.randint(0, 2) for _ in range(m)]
            if len({str(v) for v in vals}) == m:
                return ParamPoint(self.name, vals, qb)


@dataclass(frozen=True)
class ContinuousQLaguerre(_MultiplicativeBase):
    def _alpha(self, p):
        v = p.values[0].re
        return Fraction(int(v.p), int(v.q))

    def _avals(self, p):
        al = self._alpha(p)
        qb = p.qbase
        return (qb.power((al + HALF) / 2), qb.power((al + 3 * HALF) / 2))

    def _eigen(self, n, p):
        al = self._alpha(p)
        qb = p.qbase
        q = qb.q
        a = qb.power((al + HALF) / 2)
        low1 = qb.power(al + 1)
        pref = q_pochhammer(q, q, n).inverse()
        qn = q ** (-n)

        def coeff(k):
            c = pref * q_pochhammer(qn, q, k) / q_pochhammer(q, q, k) * q ** k
            return c * q_pochhammer(low1 * q ** k, q, n - k)

        return _series(Kind.MULTIPLICATIVE, n, coeff, lambda j: _pair_mult(a * q ** j))

    def _energy(self, n, p):
        return p.qbase.q ** (-n) - 1

    def _forward(self, n, p):
        al = self._alpha(p)
        qb = p.qbase
        return qb.power((al + 3 * HALF) / 2) * qb.q ** (-n)

    def _backward(self, n, p):
        al = self._alpha(p)
        qb = p.qbase
        return qb.power(-(al + 3 * HALF) / 2) * qb.q ** n * (qb.q ** (-n) - 1)

    def _twist(self, p):
        return ParamPoint(p.family, [-p.values[0]], p.qbase.inverted())

    def _twist_constants(self, p):
        q = p.qbase.q
        return q, q - 1

    def _shift(self, p, k):
        return p.with_values([p.values[0] + k])

    def _r_factor(self, j, M, p):
        al = self._alpha(p)
        qb = p.qbase
        c = qb.power((al + HALF) / 2) * qb.power(-Fraction(M, 2))
        half = qb.power(HALF)
        out = RingPoly.monomial(Kind.MULTIPLICATIVE, 2 * (M + 2 - 2 * j))
        out = out * _mult_qpochhammer_poly(c, half, 2 * (j - 1), 1)
        return out * _mult_qpochhammer_poly(c, half, 2 * (M + 1 - j), -1)

    def _sample(self, rng, sbase):
        qb = _pick_base(rng, sbase)
        return ParamPoint(self.name, (rng.randint(0, 3),), qb)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_A, _M = Kind.ADDITIVE, Kind.MULTIPLICATIVE

_REGISTRY = {
    "W": Wilson("W", _A, 4, (HALF,) * 4, EtaKind.X2, "2x", "W", "Wilson"),
    "AW": AskeyWilson("AW", _M, 4, (HALF,) * 4, EtaKind.COS, "2 sin x", "AW", "Askey-Wilson"),
    "cdH": ContinuousDualHahn("cdH", _A, 3, (HALF,) * 3, EtaKind.X2, "2x", "W", "continuous dual Hahn"),
    "cH": ContinuousHahn("cH", _A, 2, (HALF,) * 2, EtaKind.X, "1", "W", "continuous Hahn"),
    "MP": MeixnerPollaczek("MP", _A, 2, (HALF, Fraction(0)), EtaKind.X, "1", "W", "Meixner-Pollaczek"),
    "cqJ": ContinuousQJacobi("cqJ", _M, 2, (Fraction(1), Fraction(1)), EtaKind.COS, "2 sin x", "A", "continuous q-Jacobi"),
    "cdqH": GroupB("cdqH", _M, 3, (HALF,) * 3, EtaKind.COS, "2 sin x", "B", "continuous dual q-Hahn"),
    "ASC": GroupB("ASC", _M, 2, (HALF,) * 2, EtaKind.COS, "2 sin x", "B", "Al-Salam-Chihara"),
    "cbqH": GroupB("cbqH", _M, 1, (HALF,), EtaKind.COS, "2 sin x", "B", "continuous big q-Hermite"),
    "cqH": GroupB("cqH", _M, 0, (), EtaKind.COS, "2 sin x", "B", "continuous q-Hermite"),
    "cqL": ContinuousQLaguerre("cqL", _M, 1, (Fraction(1),), EtaKind.COS, "2 sin x", "B", "continuous q-Laguerre"),
}

FAMILY_NAMES = tuple(_REGISTRY)


def family(name: str) -> FamilySpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}") from None


def all_families():
    return [_REGISTRY[n] for n in FAMILY_NAMES]


def _spec(spec) -> FamilySpec:
    return family(spec) if isinstance(spec, str) else spec


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def sample_params(spec, seed: int, sbase=None) -> ParamPoint:
    """Deterministic random rational parameter point for ``spec``."""
    spec = _spec(spec)
    rng = random.Random(f"{spec.name}:{seed}")
    if sbase is not None:
        from .exact import to_fmpq

        sbase = to_fmpq(sbase)
    return spec._sample(rng, sbase)


@lru_cache(maxsize=8192)
def _eigen_cached(spec: FamilySpec, n: int, p: ParamPoint) -> RingPoly:
    return spec._eigen(n, p)


def eigen_poly(spec, n: int, p: ParamPoint, cap: int = DEFAULT_CAP) -> RingPoly:
    """The eigenpolynomial ``P_n(eta(x); lambda)`` in the x / z ring."""
    spec = _spec(spec)
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n > cap:
        raise CapExceeded(f"degree {n} exceeds cap {cap}")
    return _eigen_cached(spec, n, p)


def pseudo_poly(spec, v: int, p: ParamPoint, cap: int = DEFAULT_CAP) -> RingPoly:
    """``xi_v``: the eigenpolynomial at twisted parameters (and base, Group B)."""
    spec = _spec(spec)
    return eigen_poly(spec, v, twist_params(spec, p), cap)


def energy(spec, n: int, p: ParamPoint) -> GaussianRational:
    return _spec(spec)._energy(n, p)


def forward_factor(spec, n: int, p: ParamPoint) -> GaussianRational:
    """``f_n(lambda)``."""
    return _spec(spec)._forward(n, p)


def backward_factor(spec, n: int, p: ParamPoint) -> GaussianRational:
    """``b_{n-1}(lambda)`` (indexed by ``n``)."""
    return _spec(spec)._backward(n, p)


def twist_params(spec, p: ParamPoint) -> ParamPoint:
    return _spec(spec)._twist(p)


def twist_constants(spec, p: ParamPoint):
    """``(alpha, alpha')`` of the twisted potential relations."""
    return _spec(spec)._twist_constants(p)


def kappa(spec, p: ParamPoint) -> GaussianRational:
    return _spec(spec)._kappa(p)


def potential(spec, p: ParamPoint, twisted: bool = False) -> RatFunc:
    """``V(x; lambda)`` or the twisted ``V'(x; lambda)`` as a rational function."""
    spec = _spec(spec)
    if not twisted:
        num, den = spec._potential_parts(p)
        return RatFunc(num, den)
    tp = twist_params(spec, p)
    v = potential(spec, tp)
    if spec.base_inverting_twist:
        return v.star()
    return v


def shift_params(spec, p: ParamPoint, k: int) -> ParamPoint:
    """``lambda + k delta``."""
    if k == 0:
        return p
    return _spec(spec)._shift(p, k)


def r_factor(spec, j: int, M: int, p: ParamPoint) -> RingPoly:
    """Column weight ``r_j`` of the mixed Casoratian with ``M + 1`` rows."""
    if not 1 <= j <= M + 1:
        raise ValueError(f"r_j needs 1 <= j <= M+1, got j={j}, M={M}")
    spec = _spec(spec)
    out = spec._r_factor(j, M, p)
    if spec.kind is Kind.MULTIPLICATIVE:
        # theta-function quasi-periodicity leaves a row-dependent power of q
        # that the displayed products drop
        out = out.scale(p.qbase.q ** (2 * (j - 1) * (M + 1 - j)))
    return out


def phi_poly(spec, qbase: QBase | None = None) -> RingPoly:
    """The auxiliary function ``varphi(x)``: ``2x``, ``1`` or ``2 sin x``."""
    spec = _spec(spec)
    if spec.phi_kind == "2x":
        return RingPoly.from_coeffs(Kind.ADDITIVE, [0, 2])
    if spec.phi_kind == "1":
        return RingPoly.const(ONE, Kind.ADDITIVE)
    # 2 sin x = -i (z - 1/z)
    return (_Z - _ZINV).scale(-I)
