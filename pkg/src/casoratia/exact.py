"""Exact Gaussian-rational scalars and (q-)shifted factorials.

Rational parts are flint ``fmpq`` values, so every operation is exact and
arbitrary precision.  ``QBase`` stores the fourth root ``s`` of the base ``q``
so that all quarter powers ``q**(m/4)`` stay rational.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from flint import fmpq

__all__ = [
    "GaussianRational",
    "QBase",
    "to_fmpq",
    "gq",
    "I",
    "ONE",
    "ZERO",
    "pochhammer",
    "q_pochhammer",
    "fraction_str",
    "parse_fraction",
]


def to_fmpq(value) -> fmpq:
    """Coerce ints, ``Fraction``s, ``fmpq`` or ``"p/q"`` strings to ``fmpq``."""
    if isinstance(value, fmpq):
        return value
    if isinstance(value, bool):
        return fmpq(int(value))
    if isinstance(value, int):
        return fmpq(value)
    if isinstance(value, Rational):
        return fmpq(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return parse_fraction(value)
    raise TypeError(f"cannot represent {value!r} as an exact rational")


def fraction_str(value: fmpq) -> str:
    return str(value)


def parse_fraction(text: str) -> fmpq:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return fmpq(int(num), int(den))
    return fmpq(int(text))


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts.

    Instances are immutable; arithmetic returns new values.  Plain ints,
    ``Fraction`` and ``fmpq`` operands are promoted automatically.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_fmpq(re))
        object.__setattr__(self, "im", to_fmpq(im))

    def __reduce__(self):
        return (GaussianRational, (str(self.re), str(self.im)))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re: fmpq, im: fmpq) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @staticmethod
    def coerce(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational._raw(to_fmpq(value), fmpq(0))

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational._raw(self.re * o.re, fmpq(0))
        return GaussianRational._raw(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "GaussianRational":
        norm = self.norm()
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational._raw(self.re / norm, -self.im / norm)

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> fmpq:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    # comparisons ----------------------------------------------------------

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(Fraction(int(self.re.p), int(self.re.q)))
        return hash((int(self.re.p), int(self.re.q), int(self.im.p), int(self.im.q)))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # text -----------------------------------------------------------------

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = self.im
        if not self.re:
            return f"{im}i"
        sign = "-" if im < 0 else "+"
        return f"{self.re}{sign}{-im if im < 0 else im}i"

    def __repr__(self):
        return f"GaussianRational({self})"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Inverse of ``str``: ``"3/2"``, ``"-5i"``, ``"3/2-5/7i"``."""
        text = text.replace(" ", "").replace("\u2212", "-")
        if not text:
            raise ValueError("empty Gaussian rational")
        try:
            if not text.endswith("i"):
                return cls._raw(parse_fraction(text), fmpq(0))
            body = text[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            if cut > 0:
                re_txt, im_txt = body[:cut], body[cut:]
            else:
                re_txt, im_txt = "", body
            if im_txt in ("", "+", "-"):
                im_txt += "1"
            re_part = parse_fraction(re_txt) if re_txt else fmpq(0)
            return cls._raw(re_part, parse_fraction(im_txt))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a Gaussian rational: {text!r}") from exc


def gq(re=0, im=0) -> GaussianRational:
    return GaussianRational(re, im)


ZERO = GaussianRational._raw(fmpq(0), fmpq(0))
ONE = GaussianRational._raw(fmpq(1), fmpq(0))
I = GaussianRational._raw(fmpq(0), fmpq(1))


class QBase:
    """Base ``q = s**4`` stored through its fourth root ``s``.

    Sampled points keep ``0 < s < 1``.  A base-inverted point (q -> 1/q)
    carries ``s > 1``; ``inverted()`` produces it.
    """

    __slots__ = ("s",)

    def __init__(self, s):
        s = to_fmpq(s)
        if s <= 0 or s == 1:
            raise ValueError("QBase needs s > 0 and s != 1")
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("QBase is immutable")

    def __reduce__(self):
        return (QBase, (str(self.s),))

    def quarter(self, m: int) -> GaussianRational:
        """``q**(m/4) = s**m``."""
        return GaussianRational._raw(self.s ** m, fmpq(0))

    def power(self, k) -> GaussianRational:
        """``q**k`` for ``k`` in quarter-integers."""
        m = Fraction(k) * 4
        if m.denominator != 1:
            raise ValueError(f"q**{k} is not a quarter power")
        return self.quarter(int(m))

    @property
    def q(self) -> GaussianRational:
        return self.quarter(4)

    def inverted(self) -> "QBase":
        return QBase(1 / self.s)

    @property
    def is_standard(self) -> bool:
        return self.s < 1

    def __eq__(self, other):
        return isinstance(other, QBase) and self.s == other.s

    def __hash__(self):
        return hash(("QBase", int(self.s.p), int(self.s.q)))

    def __repr__(self):
        return f"QBase(s={self.s})"


def pochhammer(a, k: int) -> GaussianRational:
    """Rising factorial ``(a)_k = a (a+1) ... (a+k-1)``."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = GaussianRational.coerce(a)
    result = ONE
    for j in range(k):
        result = result * (a + j)
    return result


def q_pochhammer(a, base, k: int) -> GaussianRational:
    """``(a; base)_k = prod_{j<k} (1 - a base**j)``.

    ``base`` is the step ratio, e.g. ``QBase.q`` or ``QBase.quarter(2)``.
    """
    if k < 0:
        raise ValueError("q_pochhammer needs k >= 0")
    a = GaussianRational.coerce(a)
    base = GaussianRational.coerce(base)
    result = ONE
    term = a
    for _ in range(k):
        result = result * (1 - term)
        term = term * base
    return result
