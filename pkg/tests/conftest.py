from fractions import Fraction
from functools import lru_cache

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wres.poly import F1, F2, HPRIME, XI, Poly, poly_ring
from wres.ratfun import SymbolFunction
from wres.scalars import GaussianRational

# every property suite runs at least 100 examples
settings.register_profile("wres", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("wres")

fractions_ = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def gaussians(draw, nonzero=False):
    z = GaussianRational(draw(fractions_), draw(fractions_))
    if nonzero and not z:
        z = GaussianRational(1, Fraction(1, 3))
    return z


@st.composite
def polys(draw, n=4, names=None, max_terms=4, max_exp=3):
    ring = poly_ring(n)
    names = names or [HPRIME, F1, F2] + [XI(i) for i in range(1, n)]
    out = ring.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        exps = {nm: draw(st.integers(0, max_exp)) for nm in draw(st.sets(st.sampled_from(names), max_size=3))}
        out = out + Poly(ring, {ring.monomial_key(exps): draw(gaussians())})
    return out


@st.composite
def symbol_functions(draw, n=4, proper=True):
    """Scalar rational functions of xi_n with poles at +-i."""
    ring = poly_ring(n)
    a, b = draw(st.integers(0, 3)), draw(st.integers(0, 3))
    top = a + b - 1 if proper else a + b + 2
    deg = draw(st.integers(-1, max(top, -1)))
    names = [HPRIME, F1, XI(2)]
    num = [draw(polys(n=n, names=names, max_terms=2, max_exp=2)) + draw(gaussians())
           for _ in range(deg + 1)]
    return SymbolFunction(num, a, b, zero=ring.zero())


@lru_cache(maxsize=None)
def boundary_line_value(spec):
    """Line integral of one boundary case integrand, in sphere normal form."""
    from wres.boundary import case_integrand

    integrand = case_integrand(spec)
    if integrand.is_zero():
        return poly_ring(spec.n).zero()
    return integrand.integrate_line().normal_form()


# criterion number -> (passed, detail lines); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, list[str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, lines = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}")
        for line in lines:
            terminalreporter.write_line(f"    {line}")
