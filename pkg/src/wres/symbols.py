"""Operator symbols at a boundary point x0 with |xi'| = 1.

The collar metric is modelled to first order in x_n:

    c(xi')(x_n) = (1 + h'(0) x_n / 2) c(xi')(x0)
    |xi|^2(x_n) = (1 + h'(0) x_n) |xi'|^2 + xi_n^2

and every tangential derivative vanishes at x0.  Symbols that get
differentiated in x_n are carried as first-order jets ``(value, d/dx_n value)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .clifford import CliffordElement, build_gamma, clifford_of_covector, perturbation_A
from .poly import F1, F1BAR, F2, F2BAR, HPRIME, Poly, poly_ring
from .ratfun import SymbolFunction
from .scalars import I, GaussianRational

__all__ = [
    "BoundaryModel", "Jet", "OperatorSymbol", "DIRAC", "DIRAC_ADJ", "CUBE_ADJ", "CUBE",
    "boundary_model",
]

DIRAC = "D"            # the perturbed operator
DIRAC_ADJ = "D*"       # its formal adjoint
CUBE_ADJ = "D*DD*"
CUBE = "D^3"

_MINUS_I = GaussianRational(0, -1)


@dataclass(frozen=True)
class Jet:
    """A symbol together with its first x_n-derivative at x0."""

    value: SymbolFunction
    dxn: SymbolFunction

    def __add__(self, other: "Jet") -> "Jet":
        return Jet(self.value + other.value, self.dxn + other.dxn)

    def __neg__(self) -> "Jet":
        return Jet(-self.value, -self.dxn)

    def __sub__(self, other: "Jet") -> "Jet":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Jet):
            return Jet(self.value * other.value,
                       self.dxn * other.value + self.value * other.dxn)
        # x_n-independent factor
        return Jet(self.value * other, self.dxn * other)

    def __rmul__(self, other):
        return Jet(other * self.value, other * self.dxn)

    def d_xin(self, order: int = 1) -> "Jet":
        return Jet(self.value.d_xin(order), self.dxn.d_xin(order))


@dataclass(frozen=True)
class OperatorSymbol:
    """One homogeneous symbol component of an operator, restricted to x0."""

    order: int
    tag: str
    value: SymbolFunction
    dxn: SymbolFunction | None = None

    def jet(self) -> Jet:
        if self.dxn is None:
            raise ValueError(f"no x_n-derivative recorded for sigma_{self.order}({self.tag})")
        return Jet(self.value, self.dxn)


class BoundaryModel:
    """Metric, connection and perturbation data at the boundary point x0."""

    def __init__(self, n: int):
        if n not in (4, 6):
            raise ValueError(f"boundary model supports n in {{4, 6}}, got {n}")
        self.n = n
        self.basis = build_gamma(n)
        self.ring = poly_ring(n)
        r = self.ring
        self.hprime = r.var(HPRIME)
        self.f1, self.f1bar = r.var(F1), r.var(F1BAR)
        self.f2, self.f2bar = r.var(F2), r.var(F2BAR)
        self.one = self.basis.identity(r)
        self.zero = CliffordElement.zero(r, self.basis.size)
        self.c_xi_prime = clifford_of_covector(self.basis, r.xis() + [0], r)
        self.c_dxn = self.basis.generator(n, r)
        self.dxn_c_xi_prime = self.c_xi_prime * (self.hprime * Fraction(1, 2))
        self.gamma_n = self.hprime * Fraction(n - 1, 2)
        self.q_coeff = self.hprime * Fraction(-(n - 1), 4)
        self.Q = self.c_dxn * self.q_coeff
        self.A = perturbation_A(self.basis, r)

    # -- algebraic pieces -----------------------------------------------

    def sigma_k(self, k: int) -> CliffordElement:
        """Spin connection coefficient sigma^k(x0) in the tangential directions."""
        if not 1 <= k <= self.n:
            raise ValueError(k)
        if k == self.n:
            return self.zero
        return (self.basis.generator(k, self.ring) * self.c_dxn) * (self.hprime * Fraction(1, 4))

    def gamma_k(self, k: int) -> Poly:
        return self.gamma_n if k == self.n else self.ring.zero()

    def perturbation(self, which: str) -> CliffordElement:
        """f1 A + f2 for D, and -conj(f1) A + conj(f2) for D*."""
        if which == DIRAC:
            return self.A * self.f1 + self.one * self.f2
        if which == DIRAC_ADJ:
            return self.A * (-self.f1bar) + self.one * self.f2bar
        raise ValueError(f"unknown first-order operator {which!r}")

    def sigma_0(self, which: str) -> CliffordElement:
        return self.Q + self.perturbation(which)

    # -- jets -----------------------------------------------------------

    def _sf(self, *coeffs) -> SymbolFunction:
        return SymbolFunction(list(coeffs), zero=self.zero)

    @cached_property
    def c_xi(self) -> Jet:
        """c(xi) = c(xi') + xi_n c(dx_n)."""
        return Jet(self._sf(self.c_xi_prime, self.c_dxn), self._sf(self.dxn_c_xi_prime))

    @cached_property
    def norm_sq(self) -> Jet:
        """|xi|^2 as a scalar jet."""
        r = self.ring
        return Jet(SymbolFunction([r.one(), r.zero(), r.one()]), SymbolFunction([self.hprime]))

    def inverse_norm(self, m: int) -> Jet:
        """|xi|^(-2m)."""
        one = self.ring.one()
        return Jet(SymbolFunction.inverse_norm(m, one),
                   SymbolFunction.inverse_norm(m + 1, one) * (self.hprime * (-m)))

    def dirac_symbol(self) -> Jet:
        """sigma_1 of D and of D*: i c(xi)."""
        return I * self.c_xi

    # -- inverses of first-order operators --------------------------------

    def sigma_minus1(self, which: str = DIRAC) -> OperatorSymbol:
        self._check_first_order(which)
        j = self.dirac_symbol() * self.inverse_norm(1)
        return OperatorSymbol(-1, which + "^-1", j.value, j.dxn)

    def sigma_minus2(self, which: str = DIRAC) -> OperatorSymbol:
        """q_-2 = -q_-1 [p_0 q_-1 + d_xi_n p_1 . D_x_n q_-1] with D_x = -i d_x."""
        self._check_first_order(which)
        q1 = self.sigma_minus1(which)
        p0 = self.sigma_0(which)
        dxi_p1 = self.dirac_symbol().value.d_xin()
        inner = p0 * q1.value + dxi_p1 * (q1.dxn * _MINUS_I)
        return OperatorSymbol(-2, which + "^-1", -(q1.value * inner))

    @staticmethod
    def _check_first_order(which: str):
        if which not in (DIRAC, DIRAC_ADJ):
            raise ValueError(f"unknown first-order operator {which!r}")

    # -- third-order operators (n = 6) ----------------------------------

    def _check_cube(self, which: str):
        if self.n != 6:
            raise ValueError(f"third-order symbols are only used for n = 6, not n = {self.n}")
        if which not in (CUBE_ADJ, CUBE):
            raise ValueError(f"unknown third-order operator {which!r}")

    def _factors(self, which: str) -> tuple[str, str, str]:
        return (DIRAC_ADJ, DIRAC, DIRAC_ADJ) if which == CUBE_ADJ else (DIRAC, DIRAC, DIRAC)

    def sigma_3_cube(self, which: str) -> SymbolFunction:
        self._check_cube(which)
        return (self.dirac_symbol() * self.norm_sq).value

    def sigma_2_cube(self, which: str, route: str = "closed") -> SymbolFunction:
        """sigma_2 of D*DD* or D^3 at x0.

        ``route="closed"`` assembles the closed form
            c(dx_n) h' |xi'|^2 + c(xi) (2 sigma^k - Gamma^k) xi_k + |xi|^2 Q
            + 2 |xi|^2 P_outer - c(xi) P_middle c(xi),
        ``route="composition"`` composes the three first-order symbols.
        """
        self._check_cube(which)
        if route == "composition":
            return self._sigma_2_by_composition(which)
        if route != "closed":
            raise ValueError(f"unknown route {route!r}")
        outer, middle, _ = self._factors(which)
        cxi = self.c_xi.value
        nsq = self.norm_sq.value
        r = self.ring
        metric = self._sf(self.c_dxn * self.hprime)  # |xi'|^2 = 1
        conn = self._sf(self.zero)
        for k in range(1, self.n):
            xk = r.var(f"xi{k}")
            conn = conn + self._sf(self.sigma_k(k) * (xk * 2))
        conn = conn + self.xi_n_sf() * (self.one * (-self.gamma_n))
        pert_outer = self.perturbation(outer)
        pert_mid = self.perturbation(middle)
        return (metric + cxi * conn + nsq * self.Q
                + nsq * (pert_outer * 2) - cxi * pert_mid * cxi)

    def xi_n_sf(self) -> SymbolFunction:
        return SymbolFunction.xi_n(self.ring.one())

    def _sigma_2_by_composition(self, which: str) -> SymbolFunction:
        outer, middle, inner = self._factors(which)
        p1 = self.dirac_symbol()
        dxi_p1 = p1.value.d_xin()
        p0_mid, p0_in, p0_out = (self.sigma_0(middle), self.sigma_0(inner),
                                  self.sigma_0(outer))
        # B = middle o inner
        b2 = p1 * p1
        b1 = (p1.value * p0_in + p0_mid * p1.value + dxi_p1 * (p1.dxn * _MINUS_I))
        # outer o B, order 2 part
        return p1.value * b1 + p0_out * b2.value + dxi_p1 * (b2.dxn * _MINUS_I)

    def sigma_minus3(self, which: str = CUBE_ADJ) -> OperatorSymbol:
        self._check_cube(which)
        j = self.dirac_symbol() * self.inverse_norm(2)
        return OperatorSymbol(-3, which + "^-1", j.value, j.dxn)

    def sigma_minus4(self, which: str = CUBE_ADJ, route: str = "closed") -> OperatorSymbol:
        """q_-4 = -q_-3 [p_2 q_-3 + d_xi_n p_3 . D_x_n q_-3]."""
        self._check_cube(which)
        q3 = self.sigma_minus3(which)
        p2 = self.sigma_2_cube(which, route)
        dxi_p3 = self.sigma_3_cube(which).d_xin()
        inner = p2 * q3.value + dxi_p3 * (q3.dxn * _MINUS_I)
        return OperatorSymbol(-4, which + "^-1", -(q3.value * inner))

    # -- derivatives ------------------------------------------------------

    @staticmethod
    def dxn_derivative(symbol: OperatorSymbol) -> OperatorSymbol:
        if symbol.dxn is None:
            raise ValueError(f"sigma_{symbol.order}({symbol.tag}) carries no x_n-derivative")
        return OperatorSymbol(symbol.order, symbol.tag, symbol.dxn)

    @staticmethod
    def dxprime_derivative(symbol: OperatorSymbol) -> OperatorSymbol:
        """Tangential derivatives vanish at x0 in normal coordinates."""
        return OperatorSymbol(symbol.order, symbol.tag, symbol.value.zero_like(),
                              symbol.value.zero_like())


@lru_cache(maxsize=None)
def boundary_model(n: int) -> BoundaryModel:
    """Shared model instance per dimension."""
    return BoundaryModel(n)
