"""Interior integrands from the Lichnerowicz-type endomorphism E.

For a Laplace-type operator written as -(nabla^2 + E), the residue of its
power -(n-2)/2 is

    (n-2) (4 pi)^(n/2) / (n/2 - 1)!  *  int_M tr(s/6 + E) dvol.

At the centre of normal coordinates only the algebraic part of E survives:
with P = f1 A + f2, P* = -conj(f1) A + conj(f2) and B_i = c(e_i) X + Y c(e_i),

    D*D:  E = -s/4 - P* P - 1/4 sum_i B_i^2     (X = P, Y = P*)
    D^2:  E = -s/4 - P  P - 1/4 sum_i B_i^2     (X = Y = P)

Derivatives of the perturbation drop out of the trace (see
:func:`trace_identity_suite`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .clifford import CliffordElement, build_gamma, perturbation_A, trace_product
from .poly import F1, F1BAR, F2, F2BAR, P, S, Poly, poly_ring
from .scalars import GaussianRational

__all__ = [
    "InteriorIntegrand", "WHICH", "trace_E", "wres_integrand", "closed_form_braces",
    "collapse_sigma", "trace_identity_suite", "IdentityCheck",
]

DSTAR_D = "dstar-d"
D2 = "d2"
# CLI name -> (operator, required dimension or None)
WHICH: dict[str, tuple[str, int | None]] = {
    DSTAR_D: (DSTAR_D, None),
    D2: (D2, None),
    "dstar-d-squared": (DSTAR_D, 6),
    "d4": (D2, 6),
}

SIGMA = "sigma"  # stands for sum_{u<v} (p_uv - p_vu)^2 in collapsed output


@dataclass(frozen=True)
class InteriorIntegrand:
    """``prefactor * pi^pi_power * braces``."""

    n: int
    which: str
    prefactor: Fraction
    pi_power: int
    braces: Poly

    def coefficients(self) -> dict[str, GaussianRational]:
        return collapse_sigma(self.braces)


def _operator(which: str, n: int) -> str:
    if which not in WHICH:
        raise ValueError(f"unknown operator {which!r}; choose from {sorted(WHICH)}")
    op, dim = WHICH[which]
    if dim is not None and dim != n:
        raise ValueError(f"{which!r} is defined for n = {dim} only")
    return op


def endomorphism(n: int, which: str) -> CliffordElement:
    """Algebraic part of E at x0, including the -s/4 term."""
    op = _operator(which, n)
    basis = build_gamma(n)
    ring = poly_ring(n)
    one = basis.identity(ring)
    A = perturbation_A(basis, ring)
    p = A * ring.var(F1) + one * ring.var(F2)
    p_adj = A * (-ring.var(F1BAR)) + one * ring.var(F2BAR)
    left, x, y = (p_adj, p, p_adj) if op == DSTAR_D else (p, p, p)
    e = one * (ring.var(S) * Fraction(-1, 4)) - left * p
    for i in range(1, n + 1):
        c = basis.generator(i, ring)
        b = c * x + y * c
        e = e - (b * b) * Fraction(1, 4)
    return e


def trace_E(n: int, which: str) -> Poly:
    return endomorphism(n, which).trace()


def wres_integrand(n: int, which: str) -> InteriorIntegrand:
    if n < 4 or n % 2:
        raise ValueError(f"interior integrand needs even n >= 4, got {n}")
    op = _operator(which, n)
    ring = poly_ring(n)
    size = build_gamma(n).size
    braces = ring.var(S) * Fraction(size, 6) + trace_E(n, op)
    half = n // 2
    prefactor = Fraction((n - 2) * 4 ** half, factorial(half - 1))
    return InteriorIntegrand(n, which, prefactor, half, braces)


def closed_form_braces(n: int, which: str) -> Poly:
    """The general-n closed form of tr(s/6 + E), without the 2^(n/2) factor."""
    op = _operator(which, n)
    r = poly_ring(n)
    s, f1, f1b, f2, f2b = (r.var(x) for x in (S, F1, F1BAR, F2, F2BAR))
    sig = r.sum_a_squared()
    if op == D2:
        return s * Fraction(-1, 12) + f1 * f1 * sig * (3 - n) + f2 * f2 * (n - 1)
    inner = ((f1 * f1 + f1b * f1b) * (n - 4) - f1 * f1b * (2 * n)) * sig \
        + f2 * f2b * (2 * n) - f2 * f2 * n - f2b * f2b * n
    return s * Fraction(-1, 12) - inner * Fraction(1, 4) - f2 * f2b - f1 * f1b * sig


def collapse_sigma(p: Poly) -> dict[str, GaussianRational]:
    """Rewrite ``p`` through sigma = sum (p_uv - p_vu)^2 and list coefficients.

    Raises ``ValueError`` if the p-dependence is not a multiple of sigma.
    """
    ring = p.ring
    a12 = P(1, 2)
    mult = ring.zero()
    for exps, c in p.items():
        if exps.get(a12) == 2:
            rest = {k: v for k, v in exps.items() if k != a12}
            mult = mult + Poly(ring, {ring.monomial_key(rest): c})
    remainder = p - mult * ring.sum_a_squared()
    pvars = {P(u, v) for u, v in ring.pairs()}
    if not remainder.free_of(pvars) or not mult.free_of(pvars):
        raise ValueError("polynomial is not a function of sum (p_uv - p_vu)^2")
    out: dict[str, GaussianRational] = {}
    for part, tag in ((remainder, ""), (mult, SIGMA)):
        for exps, c in part.items():
            names = [k if e == 1 else f"{k}^{e}" for k, e in exps.items()]
            if tag:
                names.append(tag)
            out["*".join(names) or "1"] = c
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    expected: Poly
    got: Poly

    @property
    def passed(self) -> bool:
        return self.expected == self.got


def trace_identity_suite(n: int) -> list[IdentityCheck]:
    """The four trace identities behind the interior formulas."""
    basis = build_gamma(n)
    ring = poly_ring(n)
    one = basis.identity(ring)
    tr_id = Fraction(basis.size)
    A = perturbation_A(basis, ring)
    sig = ring.sum_a_squared()
    f1, f2 = ring.var(F1), ring.var(F2)
    p = A * f1 + one * f2
    checks = [
        IdentityCheck("tr A = 0", ring.zero(), A.trace()),
        IdentityCheck("tr A^2 = -sigma tr(id)", sig * (-tr_id), trace_product(A, A)),
    ]
    total = ring.zero()
    for i in range(1, n + 1):
        cp = basis.generator(i, ring) * p
        total = total + trace_product(cp, cp)
    expected = (f1 * f1 * sig * (n - 4) - f2 * f2 * n) * tr_id
    checks.append(IdentityCheck("tr sum_i [c_i (f1 A + f2)]^2", expected, total))
    # c(e_j) times any covariant derivative of f1 A + f2 lies in the span of
    # c_j c_u c_v and c_j, all traceless; check on that spanning set
    worst = ring.zero()
    for j in range(1, n + 1):
        cj = basis.generator(j, ring)
        worst = worst + cj.trace() * ring.var(F2)
        for u, v in ring.pairs():
            t = trace_product(cj, basis.generator(u, ring), basis.generator(v, ring))
            worst = worst + t * ring.var(P(u, v))
    checks.append(IdentityCheck("tr c_j nabla_j (f1 A + f2) = 0", ring.zero(), worst))
    return checks
