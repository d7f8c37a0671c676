"""Sparse multivariate polynomials over GaussianRational.

The indeterminates are fixed per dimension ``n``:

    hp            h'(0)
    f1, f1b       f1 and its conjugate
    f2, f2b       f2 and its conjugate
    p{u}{v}       antisymmetrised tensor entry p_uv - p_vu, 1 <= u < v <= n
    xi{i}         tangential covector components, 1 <= i <= n-1
    s             scalar curvature marker

An exponent vector is packed into a single int, ``_BITS`` bits per
indeterminate, so monomial multiplication is integer addition.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .scalars import ONE, ZERO, GaussianRational, as_gaussian

__all__ = [
    "PolyRing", "Poly", "RingMismatchError",
    "HPRIME", "F1", "F1BAR", "F2", "F2BAR", "S", "P", "XI",
    "poly_ring", "sphere_normal_form", "conj_poly",
]

_BITS = 16
_MASK = (1 << _BITS) - 1

HPRIME, F1, F1BAR, F2, F2BAR, S = "hp", "f1", "f1b", "f2", "f2b", "s"


def P(u: int, v: int) -> str:
    """Name of the antisymmetric tensor variable a_uv = p_uv - p_vu (u < v)."""
    if not u < v:
        raise ValueError(f"P({u},{v}) needs u < v")
    return f"p{u}{v}" if v < 10 else f"p{u}_{v}"


def XI(i: int) -> str:
    return f"xi{i}"


class RingMismatchError(ValueError):
    """Raised when polynomials from different rings are combined."""


_CONJ_SWAP = {F1: F1BAR, F1BAR: F1, F2: F2BAR, F2BAR: F2}


@dataclass(frozen=True, eq=False)
class PolyRing:
    n: int
    names: tuple[str, ...] = field(init=False)
    index: Mapping[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise ValueError(f"dimension must be even and >= 2, got {self.n}")
        n = self.n
        names = [HPRIME, F1, F1BAR, F2, F2BAR]
        names += [P(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        names += [XI(i) for i in range(1, n)]
        names.append(S)
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "index", {nm: k for k, nm in enumerate(names)})

    # -- construction ---------------------------------------------------

    def shift(self, name: str) -> int:
        try:
            return self.index[name] * _BITS
        except KeyError:
            raise KeyError(f"{name!r} is not an indeterminate of {self}") from None

    def monomial_key(self, exponents: Mapping[str, int]) -> int:
        key = 0
        for name, e in exponents.items():
            if e < 0 or e > _MASK:
                raise ValueError(f"exponent {e} out of range")
            key += e << self.shift(name)
        return key

    def exponents(self, key: int) -> tuple[int, ...]:
        return tuple((key >> (k * _BITS)) & _MASK for k in range(len(self.names)))

    def const(self, c=1) -> "Poly":
        c = as_gaussian(c)
        return Poly(self, {0: c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def var(self, name: str) -> "Poly":
        return Poly(self, {1 << self.shift(name): ONE})

    def xis(self) -> list["Poly"]:
        return [self.var(XI(i)) for i in range(1, self.n)]

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in range(u + 1, self.n + 1)]

    def sum_a_squared(self) -> "Poly":
        """Sum over u<v of (p_uv - p_vu)^2."""
        out = self.zero()
        for u, v in self.pairs():
            a = self.var(P(u, v))
            out = out + a * a
        return out

    @functools.cached_property
    def _xi_names(self) -> tuple[str, ...]:
        return tuple(XI(i) for i in range(1, self.n))

    @functools.cached_property
    def _sphere_rest(self) -> "Poly":
        # 1 - xi2^2 - ... - xi_{n-1}^2, the replacement for xi1^2
        out = self.one()
        for x in self.xis()[1:]:
            out = out - x * x
        return out

    def __repr__(self):
        return f"PolyRing(n={self.n})"


@functools.lru_cache(maxsize=None)
def poly_ring(n: int) -> PolyRing:
    """The shared ring instance for dimension ``n``."""
    return PolyRing(n)


class Poly:
    """Immutable polynomial; ``terms`` maps packed exponents to coefficients."""

    __slots__ = ("ring", "terms", "_nf")

    def __init__(self, ring: PolyRing, terms: Mapping[int, GaussianRational], _nf=False):
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if c}
        self._nf = _nf

    @classmethod
    def _raw(cls, ring, terms, nf=False):
        p = object.__new__(cls)
        p.ring, p.terms, p._nf = ring, terms, nf
        return p

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "Poly"):
        if other.ring is not self.ring and other.ring.names != self.ring.names:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        c = as_gaussian(other)
        if c is None:
            return None
        return self.ring.const(c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {k: -c for k, c in self.terms.items()}, self._nf)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            out: dict[int, GaussianRational] = {}
            get = out.get
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    k = k1 + k2
                    v = get(k)
                    out[k] = c1 * c2 if v is None else v + c1 * c2
            return Poly._raw(self.ring, {k: c for k, c in out.items() if c})
        c = as_gaussian(other)
        if c is None:
            return NotImplemented
        if not c:
            return self.ring.zero()
        return Poly._raw(self.ring, {k: v * c for k, v in self.terms.items()}, self._nf)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_gaussian(other)
        if c is None:
            return NotImplemented
        return self * (ONE / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out, base = self.ring.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Poly) else other
        if o is None:
            return NotImplemented
        return self.ring.names == o.ring.names and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def constant_term(self) -> GaussianRational:
        return self.terms.get(0, ZERO)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.terms)

    def degree(self, name: str) -> int:
        sh = self.ring.shift(name)
        return max(((k >> sh) & _MASK for k in self.terms), default=0)

    def variables(self) -> set[str]:
        out = set()
        for k in self.terms:
            for idx, e in enumerate(self.ring.exponents(k)):
                if e:
                    out.add(self.ring.names[idx])
        return out

    def free_of(self, names: Iterable[str]) -> bool:
        return not (self.variables() & set(names))

    def items(self):
        """Yield ``({name: exponent}, coeff)`` in a deterministic order."""
        names = self.ring.names
        for k in sorted(self.terms):
            exps = self.ring.exponents(k)
            yield {names[i]: e for i, e in enumerate(exps) if e}, self.terms[k]

    def coefficient(self, exponents: Mapping[str, int]) -> GaussianRational:
        return self.terms.get(self.ring.monomial_key(exponents), ZERO)

    def diff(self, name: str) -> "Poly":
        sh = self.ring.shift(name)
        unit = 1 << sh
        out = {}
        for k, c in self.terms.items():
            e = (k >> sh) & _MASK
            if e:
                out[k - unit] = c * e
        return Poly._raw(self.ring, out)

    def subs(self, name: str, value: "Poly | int") -> "Poly":
        """Substitute a polynomial (or scalar) for one indeterminate."""
        value = self._coerce(value)
        sh = self.ring.shift(name)
        out = self.ring.zero()
        powers = {0: self.ring.one()}
        for k, c in self.terms.items():
            e = (k >> sh) & _MASK
            if e not in powers:
                powers[e] = value ** e
            out = out + Poly._raw(self.ring, {k - (e << sh): c}) * powers[e]
        return out

    def conj(self) -> "Poly":
        """Conjugate coefficients and swap f1 <-> f1b, f2 <-> f2b."""
        ring = self.ring
        swaps = [(ring.shift(a), ring.shift(b)) for a, b in ((F1, F1BAR), (F2, F2BAR))]
        out = {}
        for k, c in self.terms.items():
            for sa, sb in swaps:
                ea, eb = (k >> sa) & _MASK, (k >> sb) & _MASK
                k += (eb - ea) << sa
                k += (ea - eb) << sb
            out[k] = c.conj()
        return Poly._raw(ring, out, self._nf)

    def evaluate(self, values: Mapping[str, complex]) -> complex:
        """Floating-point evaluation; missing indeterminates count as 0."""
        names = self.ring.names
        total = 0j
        for k, c in self.terms.items():
            term = complex(c)
            for idx, e in enumerate(self.ring.exponents(k)):
                if e:
                    term *= values.get(names[idx], 0) ** e
            total += term
        return total

    def normal_form(self) -> "Poly":
        """Remainder modulo xi1^2 + ... + xi_{n-1}^2 - 1 (grlex, xi1 greatest)."""
        if self._nf:
            return self
        ring = self.ring
        sh = ring.shift(XI(1))
        rest = ring._sphere_rest
        powers = {0: ring.one()}
        out: dict[int, GaussianRational] = {}
        pending = []
        for k, c in self.terms.items():
            e = (k >> sh) & _MASK
            if e < 2:
                v = out.get(k)
                out[k] = c if v is None else v + c
            else:
                pending.append((k - ((e - e % 2) << sh), e // 2, c))
        for base, m, c in pending:
            if m not in powers:
                powers[m] = rest ** m
            for k2, c2 in powers[m].terms.items():
                k = base + k2
                v = out.get(k)
                out[k] = c * c2 if v is None else v + c * c2
        return Poly._raw(ring, {k: c for k, c in out.items() if c}, True)

    # -- display --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "*".join(nm if e == 1 else f"{nm}^{e}" for nm, e in exps.items())
            cs = str(c)
            if c.im and c.re:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self})"


def sphere_normal_form(p: Poly, n: int | None = None) -> Poly:
    if n is not None and n != p.ring.n:
        raise RingMismatchError(f"polynomial lives in dimension {p.ring.n}, not {n}")
    return p.normal_form()


def conj_poly(p: Poly) -> Poly:
    return p.conj()
