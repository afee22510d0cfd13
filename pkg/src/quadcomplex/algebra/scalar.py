"""Gaussian rational arithmetic.

A Scalar is an element of Q(i), stored as (a + b*i)/d with integers a, b
and d > 0, gcd(a, b, d) = 1.  All operations are exact.  Values are
immutable and hashable.
"""

from __future__ import annotations

import math
import re as _re
from fractions import Fraction


class Scalar:
    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        if isinstance(a, Fraction) or isinstance(b, Fraction) or isinstance(d, Fraction):
            fa, fb, fd = Fraction(a), Fraction(b), Fraction(d)
            den = fd.numerator * fa.denominator * fb.denominator
            a = fa.numerator * fb.denominator * fd.denominator
            b = fb.numerator * fa.denominator * fd.denominator
            d = den
        if d == 0:
            raise ZeroDivisionError("scalar with zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(math.gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> "Scalar":
        f = Fraction(value)
        return cls(f.numerator, 0, f.denominator)

    @classmethod
    def from_pair(cls, re_part, im_part) -> "Scalar":
        fr, fi = Fraction(re_part), Fraction(im_part)
        d = fr.denominator * fi.denominator
        return cls(fr.numerator * fi.denominator, fi.numerator * fr.denominator, d)

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def is_rational(self) -> bool:
        return self.b == 0

    def is_one(self) -> bool:
        return self.b == 0 and self.a == self.d

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.a * other.d + other.a * self.d,
                      self.b * other.d + other.b * self.d,
                      self.d * other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.a * other.d - other.a * self.d,
                      self.b * other.d - other.b * self.d,
                      self.d * other.d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return Scalar(self.a * other.a, 0, self.d * other.d)
        return Scalar(self.a * other.a - self.b * other.b,
                      self.a * other.b + self.b * other.a,
                      self.d * other.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero Scalar")
        n = other.a * other.a + other.b * other.b
        # 1/((a+bi)/d) = d*(a-bi)/(a^2+b^2)
        return self * Scalar(other.d * other.a, -other.d * other.b, n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n: int):
        if n < 0:
            return (ONE / self) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """The field norm a^2 + b^2 (a nonnegative rational)."""
        return Fraction(self.a * self.a + self.b * self.b, self.d * self.d)

    def inverse(self) -> "Scalar":
        return ONE / self

    # -- order helpers (for deterministic sorting only) ----------------

    def sort_key(self):
        return (self.re, self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    # -- square roots ---------------------------------------------------

    def sqrt(self):
        """An exact square root in Q(i), or None if no such element exists."""
        if not self:
            return ZERO
        x, y = self.re, self.im
        n2 = x * x + y * y
        n = _rational_sqrt(n2)
        if n is None:
            return None
        re2 = (x + n) / 2
        a = _rational_sqrt(re2)
        if a is None:
            return None
        if a != 0:
            w = Scalar.from_pair(a, y / (2 * a))
        else:
            b = _rational_sqrt(-x)
            if b is None:
                return None
            w = Scalar.from_pair(0, b)
        return w if w * w == self else None

    def is_square(self) -> bool:
        return self.sqrt() is not None

    # -- formatting -----------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return "Scalar(%s)" % format_scalar(self)


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int):
        return Scalar(value)
    if isinstance(value, Fraction):
        return Scalar(value.numerator, 0, value.denominator)
    return NotImplemented


def scalar(value) -> Scalar:
    """Coerce an int, Fraction, string or Scalar to a Scalar."""
    if isinstance(value, str):
        return parse_scalar(value)
    s = _coerce(value)
    if s is NotImplemented:
        raise TypeError("cannot coerce %r to Scalar" % (value,))
    return s


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
TWO = Scalar(2)


def _rational_sqrt(f: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if f < 0:
        return None
    pn = math.isqrt(f.numerator)
    if pn * pn != f.numerator:
        return None
    pd = math.isqrt(f.denominator)
    if pd * pd != f.denominator:
        return None
    return Fraction(pn, pd)


# ---------------------------------------------------------------------
# canonical string form: "a/b", "a/b+c/d*i", "i", "-i", "2-i", ...


def _fmt_rat(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def format_scalar(s: Scalar) -> str:
    x, y = s.re, s.im
    if y == 0:
        return _fmt_rat(x)
    if y == 1:
        im = "i"
    elif y == -1:
        im = "-i"
    elif y > 0:
        im = _fmt_rat(y) + "*i"
    else:
        im = _fmt_rat(y) + "*i"
    if x == 0:
        return im
    sign = "+" if y > 0 else "-"
    mag = im.lstrip("-")
    return "%s%s%s" % (_fmt_rat(x), sign, mag)


_RAT = r"(?:\d+(?:/\d+)?)"
_SCALAR_RE = _re.compile(
    r"^\s*(?P<re>[+-]?%(r)s)?\s*"
    r"(?:(?P<sign>[+-])?\s*(?:(?P<imag>%(r)s)\s*\*\s*)?(?P<i>i))?\s*$"
    % {"r": _RAT}
)


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical scalar grammar; inverse of format_scalar."""
    m = _SCALAR_RE.match(text)
    if not m or (m.group("re") is None and m.group("i") is None):
        raise ValueError("malformed scalar %r" % text)
    re_part = Fraction(0)
    im_part = Fraction(0)
    if m.group("i") is not None:
        mag = Fraction(m.group("imag")) if m.group("imag") else Fraction(1)
        if m.group("sign") == "-":
            mag = -mag
        if m.group("re") is not None and m.group("sign") is None:
            # the string was like "3*i" misparsed with re='3'? regex keeps
            # them separate, so reaching here means "2i" style junk
            raise ValueError("malformed scalar %r" % text)
        im_part = mag
        if m.group("re") is not None:
            re_part = Fraction(m.group("re"))
    else:
        re_part = Fraction(m.group("re"))
    return Scalar.from_pair(re_part, im_part)
