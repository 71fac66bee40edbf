"""
Exact polynomial arithmetic.
"""

from fractions import Fraction

import pytest
from sympy import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement

from src.algebra.errors import DimensionMismatchError
from src.algebra.polynomial import Polynomial, format_rational, polynomial_ring
from src.algebra.sampling import random_polynomial
from src.cli.polynomial_parser import parse_polynomial

XY = ["x", "y"]


def P(text, gens=XY):
    return parse_polynomial(text, gens)


def test_zero_coefficients_are_dropped():
    p = Polynomial(XY, {(1, 0): 0, (0, 1): Fraction(2)})
    assert len(p) == 1
    assert p.coefficient((1, 0)) == 0
    assert Polynomial(XY, {(2, 0): 0}).is_zero()


def test_arithmetic():
    assert P("(x + y)^2") == P("x^2 + 2*x*y + y^2")
    assert P("x - x") == 0
    assert P("x*y") - P("y*x") == Polynomial.zero(XY)
    assert P("3") == 3
    assert P("1/2*x").scale(2) == P("x")


def test_derivative_and_gradient():
    f = P("x^3 - y^2")
    assert f.gradient() == (P("3*x^2"), P("-2*y"))
    assert P("5").derivative(0).is_zero()


def test_exact_divide_examples():
    assert P("x^2*y").exact_divide(P("x")) == P("x*y")
    assert P("x^3 - y^2").exact_divide(P("x")) is None
    f = P("x^3 - y^2")
    assert (f * f).exact_divide(f) == f


def test_exact_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        P("x").exact_divide(Polynomial.zero(XY))


def test_exact_divide_recovers_factor(rng):
    for _ in range(25):
        p = random_polynomial(rng, XY, 3)
        q = random_polynomial(rng, XY, 2)
        assert (p * q).exact_divide(q) == p


def test_mixed_rings_rejected():
    with pytest.raises(DimensionMismatchError):
        P("x") + parse_polynomial("x", ["x", "z"])


def test_constant_queries():
    p = P("x + 7")
    assert not p.is_constant()
    assert p.evaluate_at_zero() == 7
    assert P("7").is_constant()
    assert Polynomial.zero(XY).is_constant()


def test_rendering_parses_back(rng):
    assert P("x^3 - 1/2*x*y + 2").to_string() == "x^3 - 1/2*x*y + 2"
    for _ in range(20):
        p = random_polynomial(rng, XY, 4).scale(Fraction(3, 7))
        assert P(p.to_string()) == p


def test_format_rational():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-5, 6)) == "-5/6"


def test_primitive():
    p = P("1/2*x - 3/4*y").primitive()
    assert p == P("2*x - 3*y")
    assert P("-2*x").primitive() == P("x")


def test_backed_by_sympy_ring():
    p = P("x^2*y - 1/3*y^2")
    R = polynomial_ring(("x", "y"))
    x, y = R.gens
    assert isinstance(p.element, PolyElement)
    assert p.element.ring is R
    assert p.element == x**2 * y - QQ(1, 3) * y**2
    assert p.leading_term() == ((2, 1), Fraction(1))
    assert p.coefficient((0, 2)) == Fraction(-1, 3)
    assert p.terms == {(2, 1): Fraction(1), (0, 2): Fraction(-1, 3)}


def test_terms_are_sorted_in_grevlex():
    exps = [e for e, _ in P("y^3 + x*y^2 + x^3 + x*y + 1").sorted_terms()]
    assert exps == [(3, 0), (1, 2), (0, 3), (1, 1), (0, 0)]
    assert exps == sorted(exps, key=grevlex, reverse=True)
