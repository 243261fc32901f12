import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harary_lab.polyring import MPoly, NotDivisible, X, Y, Z, assemble_from_falling, falling_factorial, var

exps = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(MPoly)
nonzero = polys.filter(lambda p: not p.is_zero())


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p
    assert p - p == MPoly() and p * 1 == p and p + 0 == p


@given(polys, nonzero)
def test_exact_div_inverts_mul(p, q):
    assert (p * q).exact_div(q) == p


@given(polys, polys, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_eval_is_a_homomorphism(p, q, a, b, c):
    pt = {"x": a, "y": b, "z": c}
    assert (p * q).eval(pt) == p.eval(pt) * q.eval(pt)
    assert (p + q).eval(pt) == p.eval(pt) + q.eval(pt)


@given(polys)
def test_json_round_trip(p):
    assert MPoly.from_json(p.to_json()) == p
    assert all(len(e) == 3 for _, e in p.to_json())


@settings(max_examples=30)
@given(st.lists(st.integers(0, 20), min_size=0, max_size=7))
def test_falling_basis_against_integer_formula(b):
    poly = assemble_from_falling(b)
    n = len(b)
    for k in range(n + 1):
        direct = sum(bi * (math.factorial(k) // math.factorial(k - i) if k >= i else 0)
                     for i, bi in enumerate(b, start=1))
        assert poly.eval(x=k) == direct


def test_falling_factorial_values():
    assert falling_factorial(0) == MPoly.const(1)
    assert falling_factorial(3) == X * (X - 1) * (X - 2)


def test_not_divisible_and_zero_division():
    with pytest.raises(NotDivisible):
        (X + 1).exact_div(X)
    with pytest.raises(ZeroDivisionError):
        X.exact_div(MPoly())


def test_rendering():
    assert str(X**2 + X * Y + Z) == "x^2 + x*y + z"
    assert str(2 * X**2 + 4 * X + 1) == "2x^2 + 4x + 1"
    assert (2 * X**2 + 4 * X + 1).render(ascending=True) == "1 + 4x + 2x^2"
    assert str(-X + X**3) == "x^3 - x"
    assert str(MPoly()) == "0" and str(MPoly.const(-3)) == "-3"


def test_eval_and_subs():
    p = X**2 * Y - 3 * Z
    assert p.eval(x=2, y=Fraction(1, 2), z=1) == -1
    with pytest.raises(KeyError):
        p.eval(x=1)
    assert p.subs({"x": Y, "z": 0}) == Y**3
    assert var("w") * var("w") == MPoly.monomial((0, 0, 0, 2))


def test_degree_coeff_leading():
    p = 3 * X**2 * Y + Z - 7
    assert p.degree() == 3 and p.degree(0) == 2
    assert p.coeff((2, 1)) == 3 and p.coeff(()) == -7
    assert p.leading() == ((2, 1), 3)
    assert (1 - X + X**3).univariate_coeffs() == [1, -1, 0, 1]
