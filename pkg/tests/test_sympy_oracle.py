"""Independent recomputation of the zero-derivative boundary case with sympy.

Uses a different gamma-matrix ordering, true x_n-differentiation of the
collar metric, and sympy's own residues, so it shares no code with wres.
"""
from fractions import Fraction
from functools import lru_cache

import pytest

sp = pytest.importorskip("sympy")
from sympy.physics.quantum import TensorProduct  # noqa: E402

from wres.boundary import evaluate_pairing  # noqa: E402
from wres.cli import split_hprime  # noqa: E402
from wres.scalars import GaussianRational  # noqa: E402

t, x, h = sp.symbols("t x h", real=True)


def _gammas(n):
    s1 = sp.Matrix([[0, 1], [1, 0]])
    s2 = sp.Matrix([[0, -sp.I], [sp.I, 0]])
    s3 = sp.Matrix([[1, 0], [0, -1]])
    e = sp.eye(2)
    if n == 4:
        g = [TensorProduct(e, s1), TensorProduct(e, s2), TensorProduct(s1, s3), TensorProduct(s2, s3)]
    else:
        g = [TensorProduct(e, e, s1), TensorProduct(e, e, s2), TensorProduct(e, s1, s3),
             TensorProduct(e, s2, s3), TensorProduct(s1, s3, s3), TensorProduct(s2, s3, s3)]
    return [sp.I * m for m in g]


def _pi_plus(expr):
    expr = sp.cancel(sp.together(expr))
    if expr == 0:
        return sp.Integer(0)
    num, den = sp.fraction(expr)
    a = 0
    while sp.expand(den.subs(t, sp.I)) == 0:
        den = sp.cancel(den / (t - sp.I))
        a += 1
    g = num / den
    return sum(sp.diff(g, t, a - k).subs(t, sp.I) / sp.factorial(a - k) / (t - sp.I) ** k
               for k in range(1, a + 1))


@lru_cache(maxsize=None)
def oracle_case_b(n):
    """Coefficient of pi h'(0) Omega_{n-1} for the case with no derivatives
    and the lower-order factor on the left (n=4) or right (n=6).

    Evaluated along xi' = e_1, which suffices by rotational invariance.
    """
    c = _gammas(n)
    size = c[0].shape[0]
    cxi = (1 + h * x / 2) * c[0] + t * c[n - 1]
    nrm = (1 + h * x) + t ** 2
    Q = -sp.Rational(n - 1, 4) * h * c[n - 1]
    p1 = sp.I * cxi
    q1 = sp.I * cxi / nrm

    def at0(m):
        return m.subs(x, 0)

    if n == 4:
        q2 = at0(-q1 * (Q * q1 - sp.I * sp.diff(p1, t) * sp.diff(q1, x)))
        left, right = q2.applyfunc(_pi_plus), sp.diff(at0(q1), t)
    else:
        b2 = p1 * p1
        b1 = p1 * Q + Q * p1 - sp.I * sp.diff(p1, t) * sp.diff(p1, x)
        p2 = at0(p1 * b1 + Q * b2 - sp.I * sp.diff(p1, t) * sp.diff(b2, x))
        p3 = p1 * nrm
        q3 = sp.I * cxi / nrm ** 2
        q4 = at0(-q3 * (p2 * q3 - sp.I * sp.diff(p3, t) * sp.diff(q3, x)))
        left, right = at0(q1).applyfunc(_pi_plus), sp.diff(q4, t)
    tr = sp.simplify(sum((left * right)[i, i] for i in range(size)))
    value = -sp.I * 2 * sp.pi * sp.I * sp.residue(tr, t, sp.I)
    return sp.nsimplify(sp.simplify(value / (sp.pi * h)))


def _engine(n, pairing):
    (res,) = evaluate_pairing(n, pairing, ["b"])
    c, m = split_hprime(res.value.coefficient)
    assert m == 1
    return c


def test_oracle_reproduces_published_n4_value():
    assert oracle_case_b(4) == sp.Rational(9, 8)


@pytest.mark.parametrize("n,pairing", [(4, "d1-dstar1"), (6, "d1-cubeinv"), (6, "d1-d3")])
def test_engine_matches_oracle(n, pairing):
    expected = sp.Rational(oracle_case_b(n))
    assert _engine(n, pairing) == GaussianRational(Fraction(expected.p, expected.q))
