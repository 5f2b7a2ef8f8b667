"""Exact scalar arithmetic over Q and Q(i).

Every computation in this library is exact.  Elements of Q are plain
``fractions.Fraction``; elements of Q(i) are :class:`GaussianRational`, a pair
of fractions with componentwise addition and norm-based inversion.  The two
fields are kept strictly apart: a Gaussian rational with zero imaginary part
never compares equal to a Fraction, and nothing coerces implicitly.

Serialization uses the string forms ``"p/q"`` (or ``"p"`` for integers) for
rationals and ``{"re": ..., "im": ...}`` records for Gaussian rationals.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction


class GaussianRational:
    """An element of Q(i), stored as (re, im) with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash(("Q(i)", self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return format_rational(self.im) + "i" if self.im not in (1, -1) else (
                "i" if self.im == 1 else "-i")
        im = self.im
        sign = "+" if im > 0 else "-"
        mag = abs(im)
        tail = "i" if mag == 1 else format_rational(mag) + "i"
        return f"{self.re}{sign}{tail}"


def format_rational(x: Fraction) -> str:
    """Render a Fraction as "p" or "p/q"."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value) -> Fraction:
    """Parse an int or a "p/q" string into a Fraction.  Floats are rejected."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        if not _re.fullmatch(r"[+-]?\d+(?:/\d+)?", text):
            raise ValueError(f"not a rational: {value!r} (use 'p' or 'p/q')")
        try:
            return Fraction(text)
        except ZeroDivisionError as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r} (exact strings or ints only)")


_GAUSS_RE = _re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)?(?P<im>[+-](?:\d+(?:/\d+)?)?)?i$"
)


def parse_gaussian_string(text: str) -> GaussianRational:
    """Parse strings like "2", "-1/2", "i", "-i", "3i", "1+i", "1/2-3/4i"."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational")
    if "i" not in s:
        return GaussianRational(parse_rational(s), 0)
    if s in ("i", "+i"):
        return GaussianRational(0, 1)
    if s == "-i":
        return GaussianRational(0, -1)
    m = _GAUSS_RE.match(s)
    if m is None:
        # pure imaginary with explicit magnitude, e.g. "3i", "-3/4i"
        body = s[:-1]
        try:
            return GaussianRational(0, parse_rational(body))
        except ValueError:
            raise ValueError(f"not a Gaussian rational: {text!r}") from None
    re_part = m.group("re")
    im_part = m.group("im")
    re_val = parse_rational(re_part) if re_part else Fraction(0)
    if im_part is None:
        # the whole match was the imaginary magnitude
        return GaussianRational(0, parse_rational(re_part))
    if im_part in ("+", "-"):
        im_val = Fraction(1) if im_part == "+" else Fraction(-1)
    else:
        im_val = parse_rational(im_part)
    return GaussianRational(re_val, im_val)


class RationalField:
    """The field Q.  Scalars are fractions.Fraction."""

    tag = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, value) -> Fraction:
        return parse_rational(value)

    def to_json(self, x: Fraction):
        return format_rational(x)

    def conjugate(self, x: Fraction) -> Fraction:
        return x

    def sort_key(self, x: Fraction):
        return (x,)

    def __repr__(self):
        return "QQ"


class GaussianField:
    """The field Q(i).  Scalars are GaussianRational."""

    tag = "Q(i)"

    def zero(self):
        return GaussianRational(0, 0)

    def one(self):
        return GaussianRational(1, 0)

    def from_int(self, n: int):
        return GaussianRational(n, 0)

    def parse(self, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, dict):
            extra = set(value) - {"re", "im"}
            if extra:
                raise ValueError(f"unexpected keys in Gaussian rational: {sorted(extra)}")
            return GaussianRational(
                parse_rational(value.get("re", 0)), parse_rational(value.get("im", 0))
            )
        if isinstance(value, str):
            return parse_gaussian_string(value)
        if isinstance(value, int) and not isinstance(value, bool):
            return GaussianRational(value, 0)
        raise ValueError(f"not a Gaussian rational: {value!r}")

    def to_json(self, x: GaussianRational):
        return {"re": format_rational(x.re), "im": format_rational(x.im)}

    def conjugate(self, x: GaussianRational) -> GaussianRational:
        return x.conjugate()

    def sort_key(self, x: GaussianRational):
        return (x.re, x.im)

    def __repr__(self):
        return "QI"


QQ = RationalField()
QI = GaussianField()

_FIELDS = {"Q": QQ, "Q(i)": QI}


def field_by_tag(tag: str):
    if tag not in _FIELDS:
        raise ValueError(f"unknown field {tag!r}; expected 'Q' or 'Q(i)'")
    return _FIELDS[tag]
