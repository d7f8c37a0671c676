"""Boundary correction terms as a finite sum over derivative tuples.

Each admissible tuple (r, l, k, j, |alpha|) contributes

    c * int_{|xi'|=1} int_R tr[ d^j_{x_n} d^alpha_{xi'} d^k_{xi_n} pi+ sigma_r(L)
                               x d^alpha_{x'} d^{j+1}_{xi_n} d^k_{x_n} sigma_l(R) ] dxi_n

with c = (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!), where L is the
perturbed Dirac operator and R the right-hand operator of the pairing.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .ratfun import SymbolFunction
from .scalars import GaussianRational
from .sphere import SphereValue, sphere_integrate
from .symbols import CUBE, CUBE_ADJ, DIRAC, DIRAC_ADJ, BoundaryModel, OperatorSymbol, boundary_model

__all__ = [
    "PAIRINGS", "CaseSpec", "CaseResult", "enumerate_cases", "evaluate_case",
    "evaluate_pairing", "total_boundary_term", "sum_results", "LABEL_ORDER",
    "resolve_pairing", "max_workers", "case_integrand",
]

# pairing name -> (dimension, right operator, its order)
PAIRINGS: dict[str, tuple[int, str, int]] = {
    "d1-dstar1": (4, DIRAC_ADJ, 1),
    "d1-cubeinv": (6, CUBE_ADJ, 3),
    "d1-d3": (6, CUBE, 3),
}
_ALIASES = {"d1-cube": "d1-cubeinv"}

# the two zero-derivative cases carry the labels b and c in a fixed order
_ZERO_ORDER_LABELS = {
    4: {(-2, -1): "b", (-1, -2): "c"},
    6: {(-1, -4): "b", (-2, -3): "c"},
}
LABEL_ORDER = ("a1", "a2", "a3", "b", "c")


def resolve_pairing(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in PAIRINGS:
        raise ValueError(f"unknown pairing {name!r}; choose from {sorted(PAIRINGS)}")
    return name


def max_workers() -> int:
    raw = os.environ.get("WRES_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"WRES_THREADS must be a positive integer, got {raw!r}") from None
    return min(5, os.cpu_count() or 1)


@dataclass(frozen=True)
class CaseSpec:
    n: int
    pairing: str
    r: int
    l: int
    k: int
    j: int
    alpha_len: int
    label: str

    @property
    def tuple(self) -> tuple[int, int, int, int, int]:
        return (self.r, self.l, self.k, self.j, self.alpha_len)

    @property
    def coefficient(self) -> GaussianRational:
        """(-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!)."""
        power = self.alpha_len + self.j + self.k + 1
        unit = GaussianRational(0, -1) ** power
        return unit * Fraction(1, factorial(self.j + self.k + 1))


@dataclass(frozen=True)
class CaseResult:
    spec: CaseSpec
    value: SphereValue

    @property
    def label(self) -> str:
        return self.spec.label


def _label(n: int, r: int, l: int, k: int, j: int, alpha: int) -> str:
    if alpha:
        return "a1"
    if j:
        return "a2"
    if k:
        return "a3"
    return _ZERO_ORDER_LABELS[n][(r, l)]


def enumerate_cases(n: int, pairing: str) -> list[CaseSpec]:
    """All tuples with r <= -1, l <= -order(R) and r + l - k - j - |alpha| = 1 - n."""
    pairing = resolve_pairing(pairing)
    dim, _, order = PAIRINGS[pairing]
    if n != dim:
        raise ValueError(f"pairing {pairing} lives in dimension {dim}, not {n}")
    out = []
    for extra in range(n - 1 - 1 - order + 1):
        total = extra - (n - 1)  # r + l
        for r in range(-1, total + order - 1, -1):
            l = total - r
            if l > -order:
                continue
            for alpha in range(extra + 1):
                for j in range(extra - alpha + 1):
                    k = extra - alpha - j
                    out.append(CaseSpec(n, pairing, r, l, k, j, alpha,
                                        _label(n, r, l, k, j, alpha)))
    out.sort(key=lambda c: LABEL_ORDER.index(c.label))
    return out


def _left_symbol(model: BoundaryModel, r: int) -> OperatorSymbol:
    if r == -1:
        return model.sigma_minus1(DIRAC)
    if r == -2:
        return model.sigma_minus2(DIRAC)
    raise ValueError(f"no symbol of order {r} for the left factor")


def _right_symbol(model: BoundaryModel, pairing: str, l: int) -> OperatorSymbol:
    _, right, _ = PAIRINGS[pairing]
    if right == DIRAC_ADJ:
        table = {-1: model.sigma_minus1, -2: model.sigma_minus2}
    else:
        table = {-3: model.sigma_minus3, -4: model.sigma_minus4}
    if l not in table:
        raise ValueError(f"no symbol of order {l} for {right}^-1")
    return table[l](right)


def case_integrand(spec: CaseSpec) -> SymbolFunction:
    """The traced xi_n-integrand of one case, before any integration."""
    model = boundary_model(spec.n)
    left = _left_symbol(model, spec.r)
    right = _right_symbol(model, spec.pairing, spec.l)
    if spec.j:
        left = model.dxn_derivative(left)
    if spec.k:
        right = model.dxn_derivative(right)
    if spec.alpha_len:
        # the tangential x-derivative kills the right factor at x0, so the
        # xi'-derivative on the left never contributes
        right = model.dxprime_derivative(right)
    lhs = left.value.pi_plus().d_xin(spec.k)
    rhs = right.value.d_xin(spec.j + 1)
    return (lhs * rhs).map(lambda m: m.trace())


@lru_cache(maxsize=None)
def evaluate_case(spec: CaseSpec) -> CaseResult:
    """Exact value of one case; results are memoised per process."""
    integrand = case_integrand(spec)
    ring = boundary_model(spec.n).ring
    line = integrand.integrate_line() if not integrand.is_zero() else ring.zero()
    value = sphere_integrate(line.normal_form(), spec.n, pi_power=1)
    return CaseResult(spec, value * spec.coefficient)


def evaluate_pairing(n: int, pairing: str, labels=None, workers: int | None = None) -> list[CaseResult]:
    specs = enumerate_cases(n, pairing)
    if labels is not None:
        specs = [s for s in specs if s.label in set(labels)]
    workers = workers or max_workers()
    if workers == 1 or len(specs) <= 1:
        return [evaluate_case(s) for s in specs]
    boundary_model(n)  # build the shared model before fanning out
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate_case, specs))


def sum_results(results, n: int) -> SphereValue:
    total = SphereValue(boundary_model(n).ring.zero(), 1, 1)
    for res in results:
        total = total + res.value
    return total


def total_boundary_term(n: int, pairing: str) -> SphereValue:
    return sum_results(evaluate_pairing(n, pairing), n)
