"""Rational functions of xi_n with poles only at +i and -i.

A :class:`SymbolFunction` is ``N(xi_n) / ((xi_n - i)^a (xi_n + i)^b)`` where
``N`` is a polynomial in ``xi_n`` whose coefficients are either
:class:`~wres.poly.Poly` or :class:`~wres.clifford.CliffordElement` values.
Coefficients are kept reduced modulo ``|xi'|^2 = 1`` so that
``1 + xi_n^2 = |xi|^2`` holds on the nose.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

from .clifford import CliffordElement
from .poly import Poly
from .scalars import I, ONE, ZERO, GaussianRational, as_gaussian

__all__ = ["SymbolFunction", "PartialFractions", "Coeff"]

Coeff = Union[Poly, CliffordElement]


def _zero_like(x: Coeff) -> Coeff:
    if isinstance(x, CliffordElement):
        return CliffordElement.zero(x.ring, x.size)
    return x.ring.zero()


def _is_zero(x: Coeff) -> bool:
    return x.is_zero()


def _scalar_poly_mul(num: Sequence[Coeff], s: Sequence[GaussianRational], zero: Coeff) -> list[Coeff]:
    """Multiply a coefficient polynomial by a scalar polynomial in xi_n."""
    if not num:
        return []
    out = [zero] * (len(num) + len(s) - 1)
    for i, c in enumerate(num):
        if _is_zero(c):
            continue
        for j, t in enumerate(s):
            if t:
                out[i + j] = out[i + j] + c * t
    return out


def _binomial_poly(root: GaussianRational, power: int) -> list[GaussianRational]:
    """Coefficients (low to high) of (xi - root)^power."""
    return [GaussianRational(comb(power, k)) * (-root) ** (power - k) for k in range(power + 1)]


def _eval_at(num: Sequence[Coeff], point: GaussianRational, zero: Coeff) -> Coeff:
    acc = zero
    for c in reversed(num):
        acc = acc * point + c
    return acc


def _deflate(num: Sequence[Coeff], root: GaussianRational) -> list[Coeff]:
    """Exact quotient of num by (xi - root); caller guarantees divisibility."""
    d = len(num) - 1
    q = [None] * d
    carry = num[d]
    for k in range(d - 1, -1, -1):
        q[k] = carry
        carry = num[k] + carry * root
    return q


def _taylor_shift(num: Sequence[Coeff], root: GaussianRational, zero: Coeff) -> list[Coeff]:
    """Coefficients of num(root + u) as a polynomial in u."""
    out = [zero] * len(num)
    for k, c in enumerate(num):
        if _is_zero(c):
            continue
        for j in range(k + 1):
            out[j] = out[j] + c * (GaussianRational(comb(k, j)) * root ** (k - j))
    return out


def _inverse_series(shift: GaussianRational, power: int, terms: int) -> list[GaussianRational]:
    """First ``terms`` coefficients of (u + shift)^(-power) around u = 0."""
    out = []
    for m in range(terms):
        # binom(-power, m) = (-1)^m binom(power + m - 1, m)
        c = GaussianRational((-1) ** m * comb(power + m - 1, m)) if power else GaussianRational(int(m == 0))
        out.append(c * shift ** (-power - m))
    return out


@dataclass(frozen=True)
class PartialFractions:
    """``polynomial[k] xi^k + sum coeff / (xi - pole)^order``."""

    polynomial: tuple[Coeff, ...]
    terms: tuple[tuple[GaussianRational, int, Coeff], ...]


class SymbolFunction:
    """Immutable canonical rational function of xi_n."""

    __slots__ = ("numerator", "pole_up", "pole_down", "_zero")

    def __init__(self, numerator: Sequence[Coeff], pole_up: int = 0, pole_down: int = 0,
                 *, zero: Coeff | None = None):
        if pole_up < 0 or pole_down < 0:
            raise ValueError("pole multiplicities must be nonnegative")
        if zero is None:
            if not numerator:
                raise ValueError("empty numerator needs an explicit zero coefficient")
            zero = _zero_like(numerator[0])
        num = [c.normal_form() for c in numerator]
        while num and _is_zero(num[-1]):
            num.pop()
        a, b = pole_up, pole_down
        if not num:
            a = b = 0
        while a and _is_zero(_eval_at(num, I, zero)):
            num, a = _deflate(num, I), a - 1
        while b and _is_zero(_eval_at(num, -I, zero)):
            num, b = _deflate(num, -I), b - 1
        self.numerator: tuple[Coeff, ...] = tuple(num)
        self.pole_up = a
        self.pole_down = b
        self._zero = zero

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c: Coeff) -> "SymbolFunction":
        return cls([c])

    @classmethod
    def polynomial(cls, coeffs: Sequence[Coeff]) -> "SymbolFunction":
        return cls(list(coeffs))

    @classmethod
    def inverse_norm(cls, power: int, one: Coeff) -> "SymbolFunction":
        """``1 / |xi|^(2*power)`` with |xi'| = 1; ``one`` fixes the coefficient type."""
        return cls([one], power, power)

    @classmethod
    def xi_n(cls, one: Coeff) -> "SymbolFunction":
        return cls([_zero_like(one), one])

    def zero_like(self) -> "SymbolFunction":
        return SymbolFunction([], zero=self._zero)

    # -- arithmetic -----------------------------------------------------

    def _lift(self, a: int, b: int) -> list[Coeff]:
        """Numerator rewritten over (xi - i)^a (xi + i)^b, a >= pole_up, b >= pole_down."""
        num = list(self.numerator)
        if a > self.pole_up:
            num = _scalar_poly_mul(num, _binomial_poly(I, a - self.pole_up), self._zero)
        if b > self.pole_down:
            num = _scalar_poly_mul(num, _binomial_poly(-I, b - self.pole_down), self._zero)
        return num

    def __add__(self, other):
        if not isinstance(other, SymbolFunction):
            if isinstance(other, (Poly, CliffordElement)) or as_gaussian(other) is not None:
                other = SymbolFunction([self._zero + other], zero=self._zero)
            else:
                return NotImplemented
        a = max(self.pole_up, other.pole_up)
        b = max(self.pole_down, other.pole_down)
        x, y = self._lift(a, b), other._lift(a, b)
        n = max(len(x), len(y))
        zero = self._zero
        x += [zero] * (n - len(x))
        y += [zero] * (n - len(y))
        return SymbolFunction([p + q for p, q in zip(x, y)], a, b, zero=zero)

    __radd__ = __add__

    def __neg__(self):
        return SymbolFunction([-c for c in self.numerator], self.pole_up, self.pole_down,
                              zero=self._zero)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _zero_for(self, other: "SymbolFunction") -> Coeff:
        if isinstance(self._zero, CliffordElement) or isinstance(other._zero, CliffordElement):
            z = self._zero if isinstance(self._zero, CliffordElement) else other._zero
            return z
        return self._zero

    def __mul__(self, other):
        if isinstance(other, SymbolFunction):
            zero = self._zero_for(other)
            x, y = self.numerator, other.numerator
            if not x or not y:
                return SymbolFunction([], zero=zero)
            out = [zero] * (len(x) + len(y) - 1)
            for i, p in enumerate(x):
                for j, q in enumerate(y):
                    out[i + j] = out[i + j] + p * q
            return SymbolFunction(out, self.pole_up + other.pole_up,
                                  self.pole_down + other.pole_down, zero=zero)
        if isinstance(other, (Poly, CliffordElement)) or as_gaussian(other) is not None:
            zero = other if isinstance(other, CliffordElement) else None
            zero = _zero_like(zero) if zero is not None else self._zero
            return SymbolFunction([c * other for c in self.numerator], self.pole_up,
                                  self.pole_down, zero=zero)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Poly, CliffordElement)) or as_gaussian(other) is not None:
            zero = _zero_like(other) if isinstance(other, CliffordElement) else self._zero
            return SymbolFunction([other * c for c in self.numerator], self.pole_up,
                                  self.pole_down, zero=zero)
        return NotImplemented

    def map(self, fn) -> "SymbolFunction":
        """Apply a linear map (e.g. a trace) to every numerator coefficient."""
        num = [fn(c) for c in self.numerator]
        zero = fn(self._zero)
        return SymbolFunction(num, self.pole_up, self.pole_down, zero=zero)

    def __eq__(self, other):
        if not isinstance(other, SymbolFunction):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.pole_up, self.pole_down, len(self.numerator)))

    def is_zero(self) -> bool:
        return not self.numerator

    @property
    def degree(self) -> int:
        """Numerator degree minus denominator degree (-inf for zero)."""
        if not self.numerator:
            return -(10 ** 9)
        return len(self.numerator) - 1 - self.pole_up - self.pole_down

    # -- calculus -------------------------------------------------------

    def d_xin(self, order: int = 1) -> "SymbolFunction":
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        f = self
        for _ in range(order):
            f = f._d_once()
        return f

    def _d_once(self) -> "SymbolFunction":
        num, a, b, zero = list(self.numerator), self.pole_up, self.pole_down, self._zero
        if not num:
            return self
        dnum = [num[k] * k for k in range(1, len(num))]
        # N' (xi^2 + 1) - a N (xi + i) - b N (xi - i)
        t1 = _scalar_poly_mul(dnum, [ONE, ZERO, ONE], zero) if dnum else []
        t2 = _scalar_poly_mul(num, [GaussianRational(-a) * I - GaussianRational(-b) * I,
                                    GaussianRational(-a - b)], zero)
        n = max(len(t1), len(t2))
        t1 += [zero] * (n - len(t1))
        t2 += [zero] * (n - len(t2))
        return SymbolFunction([p + q for p, q in zip(t1, t2)], a + 1, b + 1, zero=zero)

    def _principal_part(self, up: bool) -> list[Coeff]:
        """Laurent coefficients c_1..c_m of the principal part at +i or -i."""
        num, zero = self.numerator, self._zero
        m, other = (self.pole_up, self.pole_down) if up else (self.pole_down, self.pole_up)
        if m == 0 or not num:
            return []
        root = I if up else -I
        shifted = _taylor_shift(num, root, zero)
        series = _inverse_series(2 * root, other, m)
        out = []
        for k in range(1, m + 1):
            want = m - k
            acc = zero
            for j in range(min(want, len(shifted) - 1) + 1):
                if series[want - j]:
                    acc = acc + shifted[j] * series[want - j]
            out.append(acc.normal_form())
        return out

    def polynomial_part(self) -> list[Coeff]:
        num, zero = list(self.numerator), self._zero
        den = _poly_scalar_product(_binomial_poly(I, self.pole_up), _binomial_poly(-I, self.pole_down))
        d = len(den) - 1
        if len(num) - 1 < d:
            return []
        quot = [zero] * (len(num) - d)
        rem = list(num)
        for k in range(len(num) - 1, d - 1, -1):
            c = rem[k]
            if _is_zero(c):
                continue
            quot[k - d] = c
            for j, t in enumerate(den):
                if t:
                    rem[k - d + j] = rem[k - d + j] - c * t
        quot = [q.normal_form() for q in quot]
        while quot and _is_zero(quot[-1]):
            quot.pop()
        return quot

    def partial_fractions(self) -> PartialFractions:
        terms = []
        for up in (True, False):
            pole = I if up else -I
            for k, c in enumerate(self._principal_part(up), start=1):
                if not _is_zero(c):
                    terms.append((pole, k, c))
        return PartialFractions(tuple(self.polynomial_part()), tuple(terms))

    @classmethod
    def from_partial_fractions(cls, pf: PartialFractions, zero: Coeff) -> "SymbolFunction":
        out = SymbolFunction(list(pf.polynomial), zero=zero)
        for pole, k, c in pf.terms:
            up = pole == I
            out = out + SymbolFunction([c], k if up else 0, 0 if up else k, zero=zero)
        return out

    def pi_plus(self) -> "SymbolFunction":
        """Keep the partial-fraction terms with pole at +i."""
        if self.polynomial_part():
            raise ValueError("pi_plus is defined only for functions vanishing at infinity")
        return self._upper_part()

    def pi_minus(self) -> "SymbolFunction":
        if self.polynomial_part():
            raise ValueError("pi_minus is defined only for functions vanishing at infinity")
        return self - self._upper_part()

    def _upper_part(self) -> "SymbolFunction":
        coeffs = self._principal_part(True)
        m, zero = len(coeffs), self._zero
        num = [zero] * m
        for k, c in enumerate(coeffs, start=1):
            # c / (xi - i)^k = c (xi - i)^(m-k) / (xi - i)^m
            for j, t in enumerate(_binomial_poly(I, m - k)):
                num[j] = num[j] + c * t
        return SymbolFunction(num, m, 0, zero=zero)

    def residue(self, up: bool = True) -> Coeff:
        pp = self._principal_part(up)
        return pp[0] if pp else self._zero

    def integrate_line(self) -> Coeff:
        """Coefficient of pi in the integral over the real xi_n axis."""
        if self.numerator and self.degree > -2:
            raise ValueError("integrand does not decay fast enough for a line integral")
        return self.residue(True) * GaussianRational(0, 2)

    # -- numerics (oracle / tests only) -----------------------------------

    def evaluate(self, xi: complex, values=None) -> complex:
        """Evaluate a Poly-coefficient function at a complex xi_n."""
        values = values or {}
        num = 0j
        for c in reversed(self.numerator):
            num = num * xi + c.evaluate(values)
        return num / ((xi - 1j) ** self.pole_up * (xi + 1j) ** self.pole_down)

    def __repr__(self):
        return (f"SymbolFunction(deg_num={len(self.numerator) - 1}, "
                f"pole_up={self.pole_up}, pole_down={self.pole_down})")


def _poly_scalar_product(x: Sequence[GaussianRational], y: Sequence[GaussianRational]) -> list[GaussianRational]:
    out = [ZERO] * (len(x) + len(y) - 1)
    for i, p in enumerate(x):
        for j, q in enumerate(y):
            out[i + j] = out[i + j] + p * q
    return out
