"""Exact rational and Gaussian-rational scalars.

Rationals are plain :class:`fractions.Fraction` values, which are already
canonical (reduced, positive denominator).  :class:`GaussianRational` pairs
two of them into ``re + im*i``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

BigRational = Fraction

__all__ = ["BigRational", "GaussianRational", "as_gaussian", "I", "ZERO", "ONE"]


class GaussianRational:
    """Immutable complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _new(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        # hot-path constructor: both parts are already Fractions
        z = object.__new__(cls)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Read forms like ``-3/8``, ``2*i``, ``65/64-41/64*i``."""
        s = text.replace(" ", "").replace("*", "")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        while cut > 0 and body[cut - 1] in "eE":
            cut = max(body.rfind("+", 0, cut), body.rfind("-", 0, cut))
        re_part, im_part = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return cls(Fraction(re_part), Fraction(im_part))

    def __add__(self, other):
        o = as_gaussian(other)
        if o is None:
            return NotImplemented
        return GaussianRational._new(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._new(-self.re, -self.im)

    def __sub__(self, other):
        o = as_gaussian(other)
        if o is None:
            return NotImplemented
        return GaussianRational._new(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = as_gaussian(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = as_gaussian(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        # most coefficients are purely real or purely imaginary
        if not d:
            return GaussianRational._new(a * c, b * c)
        if not c:
            return GaussianRational._new(-(b * d), a * d)
        if not b:
            return GaussianRational._new(a * c, a * d)
        if not a:
            return GaussianRational._new(-(b * d), b * c)
        return GaussianRational._new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_gaussian(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational._new((self.re * o.re + self.im * o.im) / d,
                                     (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = as_gaussian(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / self ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational._new(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = as_gaussian(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "i" if abs(self.im) == 1 else f"{abs(self.im)}*i"
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}"


def as_gaussian(x) -> GaussianRational | None:
    """Coerce ints, Fractions and GaussianRationals; ``None`` otherwise."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return GaussianRational(x)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
