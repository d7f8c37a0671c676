from fractions import Fraction

import pytest
from hypothesis import given

from conftest import symbol_functions
from wres.poly import poly_ring
from wres.ratfun import SymbolFunction
from wres.scalars import I, GaussianRational

R = poly_ring(4)
ONE, ZERO = R.one(), R.zero()


def sf(coeffs, a=0, b=0):
    return SymbolFunction([R.const(c) for c in coeffs], a, b, zero=ZERO)


def test_canonical_cancellation():
    # (xi^2 + 1) / (xi^2 + 1)^2 == 1/(xi^2 + 1)
    assert sf([1, 0, 1], 2, 2) == sf([1], 1, 1)
    assert sf([I, 1], 1, 1) == sf([1], 1, 0)  # (xi + i)/|xi|^2 = 1/(xi - i)


def test_pi_plus_of_inverse_norm():
    f = SymbolFunction.inverse_norm(1, ONE)
    assert f.pi_plus() == sf([GaussianRational(0, Fraction(-1, 2))], 1, 0)


def test_line_integrals():
    assert SymbolFunction.inverse_norm(1, ONE).integrate_line() == 1
    # 1 / ((xi - i)^2 (xi + i)^3) integrates to -3/8 i pi
    assert sf([1], 2, 3).integrate_line() == GaussianRational(0, Fraction(-3, 8))


def test_decay_error():
    with pytest.raises(ValueError):
        sf([0, 1], 1, 0).integrate_line()
    with pytest.raises(ValueError):
        sf([1, 0, 0, 1], 1, 1).pi_plus()


def test_polynomial_part():
    f = sf([2, 0, 0, 1], 1, 1)  # (xi^3 + 2) / (xi^2 + 1) = xi + (2 - xi)/(xi^2 + 1)
    assert f.polynomial_part() == [ZERO, ONE]


def test_derivative():
    f = SymbolFunction.inverse_norm(1, ONE)
    assert f.d_xin() == sf([0, -2], 2, 2)
    assert SymbolFunction.xi_n(ONE).d_xin(2).is_zero()


@given(symbol_functions())
def test_pi_plus_idempotent(f):
    p = f.pi_plus()
    assert p.pi_plus() == p
    assert p + f.pi_minus() == f
    assert f.pi_minus().pi_plus().is_zero()


@given(symbol_functions(proper=False))
def test_partial_fraction_round_trip(f):
    assert SymbolFunction.from_partial_fractions(f.partial_fractions(), ZERO) == f


@given(symbol_functions(proper=False), symbol_functions(proper=False))
def test_leibniz_rule(f, g):
    assert (f * g).d_xin() == f.d_xin() * g + f * g.d_xin()


@given(symbol_functions(), symbol_functions())
def test_pi_plus_linear(f, g):
    assert (f + g).pi_plus() == f.pi_plus() + g.pi_plus()


@given(symbol_functions(proper=False))
def test_residues_sum_to_zero_for_fast_decay(f):
    g = f * SymbolFunction.inverse_norm(2, ONE)
    if g.degree <= -2:
        assert g.residue(True) + g.residue(False) == ZERO


@given(symbol_functions(proper=False))
def test_numeric_evaluation_matches(f):
    values = {"hp": 0.3, "f1": 0.7, "f2": -1.1, "xi1": 0.5, "xi2": 0.5, "xi3": 0.5 ** 0.5}
    x = 0.37
    g = f.d_xin()
    h = 1e-6
    approx = (f.evaluate(x + h, values) - f.evaluate(x - h, values)) / (2 * h)
    assert abs(g.evaluate(x, values) - approx) <= 1e-5 * max(1.0, abs(approx))
