"""Floating-point cross-checks for the exact kernels.

This is the only module that touches numpy/scipy, and it is imported lazily
by the CLI so the exact pipeline never depends on floating point.
"""
from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import poly_ring
from .ratfun import SymbolFunction
from .scalars import GaussianRational
from .sphere import even_moment

__all__ = ["random_admissible", "quad_line", "line_deviation", "monte_carlo_moment",
           "run_oracle", "OracleReport", "SPHERE_VOLUME"]

# numeric sphere volumes, used only here
SPHERE_VOLUME = {3: 2 * math.pi ** 2, 4: 8 * math.pi ** 2 / 3}


def _rand_gauss(rng: random.Random) -> GaussianRational:
    return GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 6)),
                            Fraction(rng.randint(-9, 9), rng.randint(1, 6)))


def random_admissible(rng: random.Random, n: int = 4) -> SymbolFunction:
    """Random scalar function with poles at +-i that decays like xi^-2 or faster."""
    ring = poly_ring(n)
    while True:
        a, b = rng.randint(0, 4), rng.randint(0, 4)
        if a + b < 2:
            continue
        deg = rng.randint(0, a + b - 2)
        num = [ring.const(_rand_gauss(rng)) for _ in range(deg + 1)]
        f = SymbolFunction(num, a, b, zero=ring.zero())
        if not f.is_zero():
            return f


def quad_line(f: SymbolFunction, cut: float = 50.0) -> complex:
    """Adaptive quadrature over [-cut, cut] plus the two tails."""
    from scipy.integrate import IntegrationWarning, quad

    def part(fn, lo, hi):
        return quad(fn, lo, hi, limit=500, epsabs=0, epsrel=1e-13)[0]

    re = lambda s: f.evaluate(s).real  # noqa: E731
    im = lambda s: f.evaluate(s).imag  # noqa: E731
    total = 0j
    with warnings.catch_warnings():
        # roundoff warnings near 1e-13 are expected and harmless here
        warnings.simplefilter("ignore", IntegrationWarning)
        for lo, hi in ((-math.inf, -cut), (-cut, cut), (cut, math.inf)):
            total += complex(part(re, lo, hi), part(im, lo, hi))
    return total


def line_deviation(f: SymbolFunction) -> float:
    """Relative deviation of the exact line integral from quadrature."""
    from scipy.integrate import quad

    exact = complex(f.integrate_line().constant_term()) * math.pi
    numeric = quad_line(f)
    scale = quad(lambda s: abs(f.evaluate(s)), -math.inf, math.inf, limit=500)[0]
    return abs(exact - numeric) / max(abs(exact), scale)


def monte_carlo_moment(alpha: tuple[int, ...], samples: int, rng) -> tuple[float, float]:
    """Mean and standard error of xi^alpha for uniform points on S^{len(alpha)-1}."""
    import numpy as np

    pts = rng.standard_normal((samples, len(alpha)))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    vals = np.prod(pts ** np.array(alpha), axis=1)
    return float(vals.mean()), float(vals.std(ddof=1) / math.sqrt(samples))


@dataclass
class OracleReport:
    trials: int
    max_line_deviation: float = 0.0
    sphere_checks: list[tuple[int, tuple[int, ...], float, float, float]] = field(default_factory=list)

    @property
    def line_ok(self) -> bool:
        return self.max_line_deviation < 1e-9

    @property
    def sphere_ok(self) -> bool:
        return all(abs(mc - exact) <= 3 * se for _, _, exact, mc, se in self.sphere_checks)

    @property
    def passed(self) -> bool:
        return self.line_ok and self.sphere_ok


def run_oracle(seed: int = 0, trials: int = 100, samples: int = 200_000) -> OracleReport:
    import numpy as np

    rng = random.Random(seed)
    report = OracleReport(trials)
    for _ in range(trials):
        f = random_admissible(rng)
        report.max_line_deviation = max(report.max_line_deviation, line_deviation(f))
    nrng = np.random.default_rng(seed)
    for n in (4, 6):
        dim = n - 1
        for _ in range(6):
            alpha = tuple(rng.choice((0, 0, 1, 2, 2, 4)) for _ in range(dim))
            exact = float(even_moment(alpha, dim))
            mean, se = monte_carlo_moment(alpha, samples, nrng)
            report.sphere_checks.append((n, alpha, exact, mean, max(se, 1e-15)))
    return report

