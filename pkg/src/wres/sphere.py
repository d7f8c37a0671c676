"""Exact integration of polynomials in xi' over the unit sphere |xi'| = 1.

Results are rational multiples of the formal volume Omega_{n-1}; the measure
is normalised so that the constant 1 integrates to Omega_{n-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import _BITS, XI, Poly, RingMismatchError

__all__ = ["SphereValue", "sphere_integrate", "even_moment"]


@dataclass(frozen=True)
class SphereValue:
    """``coefficient * pi^pi_power * Omega_{n-1}^omega_power``."""

    coefficient: Poly
    omega_power: int = 1
    pi_power: int = 0

    def _same_units(self, other: "SphereValue"):
        if (self.omega_power, self.pi_power) != (other.omega_power, other.pi_power):
            if self.coefficient.is_zero() or other.coefficient.is_zero():
                return
            raise ValueError("cannot add sphere values with different formal factors")

    def __add__(self, other: "SphereValue") -> "SphereValue":
        self._same_units(other)
        units = self if not self.coefficient.is_zero() else other
        return SphereValue(self.coefficient + other.coefficient,
                           units.omega_power, units.pi_power)

    def __mul__(self, c) -> "SphereValue":
        return SphereValue(self.coefficient * c, self.omega_power, self.pi_power)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def even_moment(exponents: tuple[int, ...], dim: int) -> Fraction:
    """Average of xi^alpha over the unit sphere in R^dim."""
    if any(e % 2 for e in exponents):
        return Fraction(0)
    num = 1
    for e in exponents:
        num *= _double_factorial(e - 1)
    den = 1
    for j in range(sum(exponents) // 2):
        den *= dim + 2 * j
    return Fraction(num, den)


def sphere_integrate(p: Poly, n: int, pi_power: int = 0) -> SphereValue:
    """Integrate over the unit sphere in the n-1 tangential variables."""
    ring = p.ring
    if ring.n != n:
        raise RingMismatchError(f"polynomial lives in dimension {ring.n}, not {n}")
    if p.degree(XI(1)) >= 2:
        raise ValueError("sphere_integrate expects sphere normal form (xi1 degree < 2)")
    xi_idx = [ring.index[XI(i)] for i in range(1, n)]
    out: dict[int, object] = {}
    for key, c in p.terms.items():
        exps = ring.exponents(key)
        alpha = tuple(exps[i] for i in xi_idx)
        w = even_moment(alpha, n - 1)
        if not w:
            continue
        rest = key
        for i, e in zip(xi_idx, alpha):
            rest -= e << (i * _BITS)
        out[rest] = out[rest] + c * w if rest in out else c * w
    return SphereValue(Poly(ring, out), 1, pi_power)
