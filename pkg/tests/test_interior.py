from fractions import Fraction

import pytest

from wres.interior import (WHICH, closed_form_braces, collapse_sigma, trace_E,
                           trace_identity_suite, wres_integrand)
from wres.poly import F1, F1BAR, F2, F2BAR, HPRIME, S, conj_poly, poly_ring
from wres.scalars import I, GaussianRational

g = GaussianRational


def coeffs(n, which):
    return wres_integrand(n, which).coefficients()


def test_prefactors():
    assert (wres_integrand(4, "dstar-d").prefactor, wres_integrand(4, "dstar-d").pi_power) == (32, 2)
    assert (wres_integrand(6, "d4").prefactor, wres_integrand(6, "d4").pi_power) == (128, 3)


def test_n4_dstar_d():
    assert coeffs(4, "dstar-d") == {"f1*f1b*sigma": 4, "f2*f2b": 4, "f2^2": 4, "f2b^2": 4,
                                    "s": Fraction(-1, 3)}


def test_n6_dstar_d_squared():
    assert coeffs(6, "dstar-d-squared") == {
        "f1*f1b*sigma": 16, "f1^2*sigma": -4, "f1b^2*sigma": -4,
        "f2*f2b": 16, "f2^2": 12, "f2b^2": 12, "s": Fraction(-2, 3)}


def test_n6_d4():
    assert coeffs(6, "d4") == {"f1^2*sigma": -24, "f2^2": 40, "s": Fraction(-2, 3)}


@pytest.mark.parametrize("n", [4, 6])
def test_constant_potential_check(n):
    """f1 = 0 and f2 = i mu turn D*D into D^2 + mu^2, so tr E = (-s/4 - mu^2) tr(id)."""
    r = poly_ring(n)
    mu = r.var(HPRIME)  # any spare variable serves as mu
    size = 2 ** (n // 2)
    t = trace_E(n, "dstar-d").subs(F1, 0).subs(F1BAR, 0)
    t = t.subs(F2, mu * I).subs(F2BAR, mu * (-I))
    assert t == (r.var(S) * Fraction(-1, 4) - mu * mu) * size


@pytest.mark.parametrize("n", [4, 6])
def test_dstar_d_braces_are_real(n):
    braces = wres_integrand(n, "dstar-d").braces
    assert conj_poly(braces) == braces


@pytest.mark.parametrize("n", [4, 6])
def test_d2_matches_closed_form(n):
    size = 2 ** (n // 2)
    assert closed_form_braces(n, "d2") * size == wres_integrand(n, "d2").braces


@pytest.mark.parametrize("n", [4, 6])
def test_dstar_d_closed_form_except_f2_f2bar(n):
    # the closed form carries a different f2 f2bar coefficient; everything else agrees
    size = 2 ** (n // 2)
    r = poly_ring(n)
    gap = closed_form_braces(n, "dstar-d") * size - wres_integrand(n, "dstar-d").braces
    assert gap == r.var(F2) * r.var(F2BAR) * (-n * size)


@pytest.mark.parametrize("n", [4, 6])
def test_trace_identities(n):
    assert all(chk.passed for chk in trace_identity_suite(n))


def test_collapse_rejects_non_sigma():
    r = poly_ring(4)
    with pytest.raises(ValueError):
        collapse_sigma(r.var("p12"))


def test_operator_names():
    assert set(WHICH) == {"dstar-d", "d2", "dstar-d-squared", "d4"}
    with pytest.raises(ValueError):
        wres_integrand(4, "d4")
    with pytest.raises(ValueError):
        wres_integrand(4, "laplace")
