"""Polynomial and Laurent-polynomial rings over the Gaussian rationals.

A ``RingPoly`` of additive kind is a polynomial in ``x``; of multiplicative
kind it is a Laurent polynomial in ``z = exp(i x)``.  Coefficients are held as
two flint ``fmpq_poly`` objects (real and imaginary parts) plus the exponent
``low`` of the first stored coefficient.

The imaginary shift ``x -> x + i c gamma`` is the one operation every identity
leans on.  For the multiplicative kind ``gamma = log q`` and
``exp(i (x + i c gamma)) = z q**(-c)``, so the shift is ``z -> q**(-c) z``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly

from .exact import ONE, ZERO, GaussianRational, QBase

__all__ = [
    "Kind",
    "EtaKind",
    "PolyError",
    "KindMismatch",
    "NotDivisible",
    "NotInEtaImage",
    "MissingQBase",
    "RingPoly",
    "EtaPoly",
    "RatFunc",
    "shift_substitute",
    "star_conjugate",
    "exact_div",
    "to_eta_basis",
    "from_eta_basis",
    "proportional",
]

_ZERO_POLY = fmpq_poly([])


class Kind(enum.Enum):
    ADDITIVE = "additive"
    MULTIPLICATIVE = "multiplicative"


class EtaKind(enum.Enum):
    X2 = "x^2"
    X = "x"
    COS = "cos x"


class PolyError(ArithmeticError):
    pass


class KindMismatch(PolyError, TypeError):
    pass


class MissingQBase(PolyError, ValueError):
    pass


class NotDivisible(PolyError):
    def __init__(self, message: str, remainder: "RingPoly | None" = None):
        super().__init__(message)
        self.remainder = remainder


class NotInEtaImage(PolyError):
    pass


def _trailing_zeros(p: fmpq_poly) -> int:
    n = 0
    length = p.length()
    while n < length and not p[n]:
        n += 1
    return n


def _scale_real(p: fmpq_poly, c: fmpq) -> fmpq_poly:
    return p * c if c != 1 else p


class RingPoly:
    """Dense (Laurent) polynomial with Gaussian-rational coefficients."""

    __slots__ = ("kind", "low", "re", "im")

    def __init__(self, kind: Kind, re: fmpq_poly, im: fmpq_poly | None = None, low: int = 0):
        if im is None:
            im = _ZERO_POLY
        if kind is Kind.ADDITIVE:
            if low < 0:
                raise ValueError("additive polynomials have no negative degrees")
            if low:
                re = re.left_shift(low)
                im = im.left_shift(low)
                low = 0
        else:
            if re.is_zero() and im.is_zero():
                low = 0
            else:
                t = min(
                    _trailing_zeros(re) if not re.is_zero() else 1 << 30,
                    _trailing_zeros(im) if not im.is_zero() else 1 << 30,
                )
                if t:
                    re = re.right_shift(t)
                    im = im.right_shift(t)
                    low += t
        self.kind = kind
        self.low = low
        self.re = re
        self.im = im

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, kind: Kind) -> "RingPoly":
        return cls(kind, _ZERO_POLY, _ZERO_POLY)

    @classmethod
    def const(cls, c, kind: Kind) -> "RingPoly":
        c = GaussianRational.coerce(c)
        return cls(kind, fmpq_poly([c.re]), fmpq_poly([c.im]))

    @classmethod
    def var(cls, kind: Kind) -> "RingPoly":
        """``x`` (additive) or ``z`` (multiplicative)."""
        return cls(kind, fmpq_poly([0, 1]))

    @classmethod
    def monomial(cls, kind: Kind, degree: int, c=1) -> "RingPoly":
        c = GaussianRational.coerce(c)
        if kind is Kind.ADDITIVE:
            return cls(kind, fmpq_poly([c.re]).left_shift(degree), fmpq_poly([c.im]).left_shift(degree))
        return cls(kind, fmpq_poly([c.re]), fmpq_poly([c.im]), low=degree)

    @classmethod
    def from_coeffs(cls, kind: Kind, coeffs, low: int = 0) -> "RingPoly":
        """Coefficients listed from degree ``low`` upward."""
        coeffs = [GaussianRational.coerce(c) for c in coeffs]
        return cls(
            kind,
            fmpq_poly([c.re for c in coeffs]),
            fmpq_poly([c.im for c in coeffs]),
            low=low,
        )

    @classmethod
    def from_dict(cls, kind: Kind, coeffs: dict) -> "RingPoly":
        if not coeffs:
            return cls.zero(kind)
        lo, hi = min(coeffs), max(coeffs)
        return cls.from_coeffs(kind, [coeffs.get(k, 0) for k in range(lo, hi + 1)], low=lo)

    # inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def _length(self) -> int:
        return max(self.re.length(), self.im.length())

    @property
    def high(self) -> int:
        """Highest exponent present (``-1`` style sentinel for zero)."""
        if self.is_zero():
            return -1
        return self.low + self._length() - 1

    def degree(self) -> int:
        """Degree in x for additive polynomials; highest exponent otherwise."""
        return self.high

    def coeff(self, k: int) -> GaussianRational:
        j = k - self.low
        if j < 0:
            return ZERO
        return GaussianRational._raw(self.re[j], self.im[j])

    def coeffs(self) -> dict:
        """Nonzero coefficients as ``{exponent: GaussianRational}``."""
        out = {}
        for j in range(self._length()):
            c = GaussianRational._raw(self.re[j], self.im[j])
            if c:
                out[self.low + j] = c
        return out

    def leading(self) -> GaussianRational:
        return self.coeff(self.high)

    def is_constant(self) -> bool:
        return self.is_zero() or (self.low == 0 and self._length() == 1)

    def constant_value(self) -> GaussianRational:
        return self.coeff(0)

    # ring operations ------------------------------------------------------

    def _check(self, other: "RingPoly"):
        if self.kind is not other.kind:
            raise KindMismatch(f"{self.kind.value} vs {other.kind.value}")

    def _aligned(self, other: "RingPoly"):
        if self.low == other.low or self.kind is Kind.ADDITIVE:
            return self.low, self.re, self.im, other.re, other.im
        if self.is_zero():
            return other.low, _ZERO_POLY, _ZERO_POLY, other.re, other.im
        if other.is_zero():
            return self.low, self.re, self.im, _ZERO_POLY, _ZERO_POLY
        lo = min(self.low, other.low)
        a, b = self.low - lo, other.low - lo
        return (
            lo,
            self.re.left_shift(a) if a else self.re,
            self.im.left_shift(a) if a else self.im,
            other.re.left_shift(b) if b else other.re,
            other.im.left_shift(b) if b else other.im,
        )

    def _lift(self, other) -> "RingPoly":
        if isinstance(other, RingPoly):
            self._check(other)
            return other
        return RingPoly.const(other, self.kind)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except KindMismatch:
            raise
        except TypeError:
            return NotImplemented
        lo, ar, ai, br, bi = self._aligned(other)
        return RingPoly(self.kind, ar + br, ai + bi, lo)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except KindMismatch:
            raise
        except TypeError:
            return NotImplemented
        lo, ar, ai, br, bi = self._aligned(other)
        return RingPoly(self.kind, ar - br, ai - bi, lo)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RingPoly(self.kind, -self.re, -self.im, self.low)

    def __mul__(self, other):
        if isinstance(other, RingPoly):
            self._check(other)
            return self._mul_poly(other)
        try:
            c = GaussianRational.coerce(other)
        except KindMismatch:
            raise
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def _mul_poly(self, other: "RingPoly") -> "RingPoly":
        a, b, c, d = self.re, self.im, other.re, other.im
        low = self.low + other.low
        if b.is_zero() and d.is_zero():
            return RingPoly(self.kind, a * c, _ZERO_POLY, low)
        if b.is_zero():
            return RingPoly(self.kind, a * c, a * d, low)
        if d.is_zero():
            return RingPoly(self.kind, a * c, b * c, low)
        k1 = c * (a + b)
        k2 = a * (d - c)
        k3 = b * (c + d)
        return RingPoly(self.kind, k1 - k3, k1 + k2, low)

    def scale(self, c) -> "RingPoly":
        c = GaussianRational.coerce(c)
        if not c.im:
            return RingPoly(self.kind, _scale_real(self.re, c.re), _scale_real(self.im, c.re), self.low)
        return RingPoly(
            self.kind,
            self.re * c.re - self.im * c.im,
            self.re * c.im + self.im * c.re,
            self.low,
        )

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = RingPoly.const(ONE, self.kind)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, RingPoly):
            try:
                other = RingPoly.const(other, self.kind)
            except TypeError:
                return NotImplemented
        return (
            self.kind is other.kind
            and self.low == other.low
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.kind, self.low, str(self.re), str(self.im)))

    # evaluation -----------------------------------------------------------

    def __call__(self, point) -> GaussianRational:
        """Value at ``x = point`` (additive) or ``z = point`` (multiplicative)."""
        point = GaussianRational.coerce(point)
        acc = ZERO
        for j in range(self._length() - 1, -1, -1):
            acc = acc * point + GaussianRational._raw(self.re[j], self.im[j])
        if self.low:
            acc = acc * point ** self.low
        return acc

    # misc -----------------------------------------------------------------

    def conj_coeffs(self) -> "RingPoly":
        """Complex-conjugate every coefficient, variable untouched."""
        return RingPoly(self.kind, self.re, -self.im, self.low)

    def __repr__(self):
        terms = []
        var = "x" if self.kind is Kind.ADDITIVE else "z"
        for k, c in sorted(self.coeffs().items(), reverse=True):
            terms.append(f"({c})*{var}^{k}" if k else f"({c})")
        return " + ".join(terms) if terms else "0"

    def dump(self) -> dict:
        return {str(k): str(c) for k, c in sorted(self.coeffs().items())}

    def __reduce__(self):
        # flint polynomials do not pickle; go through the coefficient dump
        return (_ring_from_dump, (self.kind, self.dump()))


def _ring_from_dump(kind: Kind, data: dict) -> RingPoly:
    return RingPoly.from_dict(kind, {int(k): GaussianRational.parse(v) for k, v in data.items()})


# --------------------------------------------------------------------------
# imaginary shift, *-conjugation, division
# --------------------------------------------------------------------------


def shift_substitute(p: RingPoly, c, qbase: QBase | None = None) -> RingPoly:
    """Evaluate ``p`` at ``x + i c gamma`` (``c`` a half-integer)."""
    c = Fraction(c)
    if c == 0 or p.is_zero():
        return p
    if p.kind is Kind.ADDITIVE:
        return _additive_shift(p, fmpq(c.numerator, c.denominator))
    if qbase is None:
        raise MissingQBase("multiplicative shift needs the base q")
    m = -4 * c
    if m.denominator != 1:
        raise ValueError(f"shift {c} is not a quarter power of q")
    ratio = qbase.s ** int(m)  # z -> ratio * z
    return _scale_variable(p, ratio)


def _scale_variable(p: RingPoly, ratio: fmpq) -> RingPoly:
    n = p._length()
    factors = []
    f = ratio ** p.low
    for _ in range(n):
        factors.append(f)
        f = f * ratio
    re = fmpq_poly([p.re[j] * factors[j] for j in range(p.re.length())])
    im = fmpq_poly([p.im[j] * factors[j] for j in range(p.im.length())])
    return RingPoly(p.kind, re, im, p.low)


def _additive_shift(p: RingPoly, c: fmpq) -> RingPoly:
    # Horner with the linear factor (x + i c)
    x = fmpq_poly([0, 1])
    r, s = _ZERO_POLY, _ZERO_POLY
    for j in range(p._length() - 1, -1, -1):
        r, s = r * x - s * c + p.re[j], s * x + r * c + p.im[j]
    return RingPoly(p.kind, r, s)


def star_conjugate(p: RingPoly) -> RingPoly:
    """``f*(x) = conj(f(conj(x)))``.

    Additive: conjugate coefficients.  Multiplicative: conjugate
    coefficients and send ``z -> 1/z``.
    """
    if p.kind is Kind.ADDITIVE:
        return RingPoly(p.kind, p.re, -p.im)
    if p.is_zero():
        return p
    n = p._length()
    re = fmpq_poly([p.re[n - 1 - j] for j in range(n)])
    im = fmpq_poly([-p.im[n - 1 - j] for j in range(n)])
    return RingPoly(p.kind, re, im, low=-(p.low + n - 1))


def _base_poly(p: RingPoly) -> RingPoly:
    """Multiplicative polynomial with its monomial factor stripped."""
    return RingPoly(Kind.ADDITIVE, p.re, p.im)


def _poly_divmod_exact(a: RingPoly, d: RingPoly):
    """Quotient and remainder-flag of additive-kind polynomials."""
    if d.is_real():
        qr, rr = divmod(a.re, d.re)
        qi, ri = divmod(a.im, d.re)
        return RingPoly(Kind.ADDITIVE, qr, qi), not (rr.is_zero() and ri.is_zero())
    norm = d.re * d.re + d.im * d.im
    # a * conj(d) = (ar + i ai)(dr - i di)
    nr = a.re * d.re + a.im * d.im
    ni = a.im * d.re - a.re * d.im
    qr, rr = divmod(nr, norm)
    qi, ri = divmod(ni, norm)
    return RingPoly(Kind.ADDITIVE, qr, qi), not (rr.is_zero() and ri.is_zero())


def exact_div(p: RingPoly, d: RingPoly) -> RingPoly:
    """Return ``q`` with ``p == q * d``; raise ``NotDivisible`` otherwise."""
    if p.kind is not d.kind:
        raise KindMismatch(f"{p.kind.value} vs {d.kind.value}")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    if p.kind is Kind.ADDITIVE:
        q, bad = _poly_divmod_exact(p, d)
        if bad:
            raise NotDivisible("polynomial division leaves a remainder", p - q * d)
        return q
    q, bad = _poly_divmod_exact(_base_poly(p), _base_poly(d))
    out = RingPoly(Kind.MULTIPLICATIVE, q.re, q.im, low=p.low - d.low)
    if bad:
        raise NotDivisible("Laurent division leaves a remainder", p - out * d)
    return out


def poly_divmod(p: RingPoly, d: RingPoly):
    """Euclidean division of additive-kind polynomials over Q(i)."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if d.is_real() and p.is_real():
        q, r = divmod(p.re, d.re)
        return RingPoly(Kind.ADDITIVE, q), RingPoly(Kind.ADDITIVE, r)
    inv = d.leading().inverse()
    dd = d.high
    q = RingPoly.zero(Kind.ADDITIVE)
    r = p
    while not r.is_zero() and r.high >= dd:
        t = RingPoly.monomial(Kind.ADDITIVE, r.high - dd, r.leading() * inv)
        q = q + t
        r = r - t * d
    return q, r


def poly_gcd(a: RingPoly, b: RingPoly) -> RingPoly:
    """Monic gcd of additive-kind polynomials over Q(i)."""
    if a.is_real() and b.is_real():
        g = a.re.gcd(b.re)
        return RingPoly(Kind.ADDITIVE, g)
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.scale(a.leading().inverse())


# --------------------------------------------------------------------------
# sinusoidal-coordinate basis
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _chebyshev_t(k: int) -> fmpq_poly:
    if k == 0:
        return fmpq_poly([1])
    if k == 1:
        return fmpq_poly([0, 1])
    return fmpq_poly([0, 2]) * _chebyshev_t(k - 1) - _chebyshev_t(k - 2)


class EtaPoly:
    """Polynomial in the sinusoidal coordinate ``eta``."""

    __slots__ = ("eta", "poly")

    def __init__(self, eta: EtaKind, poly: RingPoly):
        if poly.kind is not Kind.ADDITIVE:
            raise KindMismatch("eta polynomials are stored as additive polynomials")
        self.eta = eta
        self.poly = poly

    @classmethod
    def from_coeffs(cls, eta: EtaKind, coeffs) -> "EtaPoly":
        return cls(eta, RingPoly.from_coeffs(Kind.ADDITIVE, coeffs))

    def degree(self) -> int:
        return self.poly.high

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_constant(self) -> bool:
        return self.poly.is_constant()

    def coeffs(self) -> list:
        return [self.poly.coeff(k) for k in range(self.poly.high + 1)]

    def scale(self, c) -> "EtaPoly":
        return EtaPoly(self.eta, self.poly.scale(c))

    def __eq__(self, other):
        return isinstance(other, EtaPoly) and self.eta is other.eta and self.poly == other.poly

    def __hash__(self):
        return hash((self.eta, self.poly))

    def __repr__(self):
        return f"EtaPoly[{self.eta.value}]({self.poly!r})"

    def embed(self) -> RingPoly:
        return from_eta_basis(self)


def to_eta_basis(p: RingPoly, eta: EtaKind) -> EtaPoly:
    """Rewrite ``p`` as a polynomial in ``eta``; ``NotInEtaImage`` if impossible."""
    if eta is EtaKind.X:
        if p.kind is not Kind.ADDITIVE:
            raise KindMismatch("eta = x needs an additive polynomial")
        return EtaPoly(eta, p)
    if eta is EtaKind.X2:
        if p.kind is not Kind.ADDITIVE:
            raise KindMismatch("eta = x^2 needs an additive polynomial")
        n = p._length()
        for j in range(1, n, 2):
            if p.re[j] or p.im[j]:
                raise NotInEtaImage(f"odd power x^{j} present")
        re = fmpq_poly([p.re[j] for j in range(0, p.re.length(), 2)])
        im = fmpq_poly([p.im[j] for j in range(0, p.im.length(), 2)])
        return EtaPoly(eta, RingPoly(Kind.ADDITIVE, re, im))
    if p.kind is not Kind.MULTIPLICATIVE:
        raise KindMismatch("eta = cos x needs a multiplicative polynomial")
    if p.is_zero():
        return EtaPoly(eta, RingPoly.zero(Kind.ADDITIVE))
    if p.low != -p.high:
        raise NotInEtaImage("Laurent polynomial is not symmetric under z -> 1/z")
    top = p.high
    re = fmpq_poly([p.re[top]]) if top == 0 else _ZERO_POLY
    im = fmpq_poly([p.im[top]]) if top == 0 else _ZERO_POLY
    for k in range(top + 1):
        a = p.coeff(k)
        if a != p.coeff(-k):
            raise NotInEtaImage(f"coefficients of z^{k} and z^-{k} differ")
        if k == 0:
            re, im = fmpq_poly([a.re]), fmpq_poly([a.im])
            continue
        if not a:
            continue
        t = _chebyshev_t(k)
        re = re + t * (2 * a.re)
        im = im + t * (2 * a.im)
    return EtaPoly(eta, RingPoly(Kind.ADDITIVE, re, im))


_HALF = fmpq(1, 2)


def from_eta_basis(e: EtaPoly) -> RingPoly:
    """Embed an eta polynomial back into the x / z ring."""
    p = e.poly
    if e.eta is EtaKind.X:
        return p
    if e.eta is EtaKind.X2:
        n = p._length()
        re = fmpq_poly([p.re[j // 2] if j % 2 == 0 else 0 for j in range(2 * n - 1)]) if n else _ZERO_POLY
        im = fmpq_poly([p.im[j // 2] if j % 2 == 0 else 0 for j in range(2 * n - 1)]) if n else _ZERO_POLY
        return RingPoly(Kind.ADDITIVE, re, im)
    eta_z = RingPoly(Kind.MULTIPLICATIVE, fmpq_poly([_HALF, 0, _HALF]), low=-1)
    acc = RingPoly.zero(Kind.MULTIPLICATIVE)
    for j in range(p._length() - 1, -1, -1):
        acc = acc * eta_z + GaussianRational._raw(p.re[j], p.im[j])
    return acc


def proportional(p, q):
    """``(True, ratio)`` when ``p == ratio * q`` for a nonzero constant.

    Two zero polynomials count as proportional with ``ratio = None``.
    """
    if isinstance(p, EtaPoly):
        p = p.poly
    if isinstance(q, EtaPoly):
        q = q.poly
    pz, qz = p.is_zero(), q.is_zero()
    if pz and qz:
        return True, None
    if pz or qz:
        return False, None
    if p.kind is not q.kind or p.low != q.low or p.high != q.high:
        return False, None
    ratio = p.leading() / q.leading()
    if p != q.scale(ratio):
        return False, None
    return True, ratio


# --------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------


class RatFunc:
    """Reduced quotient ``num / den`` of two ``RingPoly`` of one kind.

    Additive: monic denominator.  Multiplicative: the denominator is an
    ordinary polynomial in ``z`` with constant term 1 and the numerator
    carries any monomial factor.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: RingPoly, den: RingPoly | None = None, *, reduce: bool = True):
        if den is None:
            den = RingPoly.const(ONE, num.kind)
        if num.kind is not den.kind:
            raise KindMismatch(f"{num.kind.value} vs {den.kind.value}")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def kind(self) -> Kind:
        return self.num.kind

    @classmethod
    def from_poly(cls, p: RingPoly) -> "RatFunc":
        return cls(p)

    def _lift(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, RingPoly):
            return RatFunc(other)
        return RatFunc(RingPoly.const(other, self.kind))

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        if not isinstance(other, (RatFunc, RingPoly)):
            c = GaussianRational.coerce(other)
            return RatFunc(self.num.scale(c), self.den)
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except KindMismatch:
            raise
        except TypeError:
            return NotImplemented
        if self.kind is not o.kind:
            return False
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def star(self) -> "RatFunc":
        return RatFunc(star_conjugate(self.num), star_conjugate(self.den))

    def shift(self, c, qbase: QBase | None = None) -> "RatFunc":
        return RatFunc(shift_substitute(self.num, c, qbase), shift_substitute(self.den, c, qbase))

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def _normalize(num: RingPoly, den: RingPoly):
    if num.is_zero():
        return num, RingPoly.const(ONE, num.kind)
    if num.kind is Kind.ADDITIVE:
        g = poly_gcd(num, den)
        if g.high > 0:
            num = exact_div(num, g)
            den = exact_div(den, g)
        lead = den.leading()
        if lead != ONE:
            inv = lead.inverse()
            num, den = num.scale(inv), den.scale(inv)
        return num, den
    shift = num.low - den.low
    n0, d0 = _base_poly(num), _base_poly(den)
    g = poly_gcd(n0, d0)
    if g.high > 0:
        n0 = exact_div(n0, g)
        d0 = exact_div(d0, g)
    c0 = d0.coeff(0)
    if c0 != ONE:
        inv = c0.inverse()
        n0, d0 = n0.scale(inv), d0.scale(inv)
    return (
        RingPoly(Kind.MULTIPLICATIVE, n0.re, n0.im, low=shift),
        RingPoly(Kind.MULTIPLICATIVE, d0.re, d0.im),
    )
