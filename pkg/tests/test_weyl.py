"""
Vector fields, normal-ordered operators and their action on 1/f^k.
"""

from fractions import Fraction

import pytest

from src.algebra.errors import DimensionMismatchError, InputError
from src.algebra.polynomial import Polynomial
from src.algebra.sampling import random_polynomial
from src.algebra.weights import INFINITY, WeightVector
from src.cli.polynomial_parser import parse_polynomial
from src.weyl import (
    DifferentialOperator,
    MeroFraction,
    VectorField,
    apply_to_fraction,
    apply_to_inverse_power,
    euler_field,
    op_apply,
    op_multiply,
    vf_apply,
    vf_bracket,
    vf_is_wqh,
    vf_w_order,
    vf_wqh_parts,
)

XY = ["x", "y"]
W = WeightVector.of("1/3", "1/2")


def P(text, gens=XY):
    return parse_polynomial(text, gens)


def D(i, gens=XY):
    return DifferentialOperator.partial(gens, i)


def M(text, gens=XY):
    return DifferentialOperator.from_polynomial(P(text, gens))


def hamiltonian():
    """2y*Dx + 3x^2*Dy, the field killing x^3 - y^2."""
    return VectorField.of(P("2*y"), P("3*x^2"))


def random_operator(rng, degree=2):
    """Random operator of order <= 2 with coefficients of degree <= degree."""
    terms = {}
    for beta in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
        if rng.integers(0, 3):
            terms[beta] = random_polynomial(rng, XY, degree, terms=2)
    return DifferentialOperator(XY, terms)


def random_field(rng):
    return VectorField.of(random_polynomial(rng, XY, 3), random_polynomial(rng, XY, 3))


def test_leibniz_commutator():
    # Dx * x = x*Dx + 1
    assert D(0) * M("x") == M("x") * D(0) + 1
    assert op_multiply(D(0), M("x^2")) == M("x^2") * D(0) + M("2*x")


def test_product_matches_composition(rng):
    for _ in range(30):
        A = random_operator(rng)
        B = random_operator(rng)
        g = random_polynomial(rng, XY, 4)
        assert op_apply(A * B, g) == op_apply(A, op_apply(B, g))


def test_associativity():
    A = M("x") * D(1) + 1
    B = M("y^2") * D(0)
    C = D(0) * D(1) + M("x*y")
    assert (A * B) * C == A * (B * C)


def test_order():
    assert (M("x") * D(0) * D(0) + D(1)).order() == 2
    assert DifferentialOperator.zero(XY).order() == -1
    assert DifferentialOperator.from_constant(XY, 5).order() == 0


def test_operator_rendering():
    op = M("x^2") * D(0) * D(0) + M("x") * D(0)
    assert op.to_string() == "x^2*Dx^2 + x*Dx"
    assert DifferentialOperator.zero(XY).to_string() == "0"
    assert (M("x + y") * D(1)).to_string() == "(x + y)*Dy"


def test_mixed_variables_rejected():
    with pytest.raises(DimensionMismatchError):
        D(0) + DifferentialOperator.partial(["x", "z"], 0)
    with pytest.raises(DimensionMismatchError):
        VectorField.of(P("x"))


def test_field_application_and_operator_agree(rng):
    d = hamiltonian()
    for _ in range(10):
        g = random_polynomial(rng, XY, 4)
        assert vf_apply(d, g) == op_apply(d.as_operator(), g)
    assert vf_apply(d, P("x^3 - y^2")).is_zero()


def test_euler_bracket_scales_by_weight():
    chi = euler_field(W, XY)
    d = hamiltonian()
    assert vf_bracket(chi, d) == d.scale(Fraction(1, 6))
    assert vf_bracket(d, chi) == d.scale(Fraction(-1, 6))


def test_bracket_is_antisymmetric(rng):
    for _ in range(30):
        a, b = random_field(rng), random_field(rng)
        assert vf_bracket(a, b) == vf_bracket(b, a).scale(-1)
        assert vf_bracket(a, a) == VectorField.zero(XY)


def test_bracket_satisfies_jacobi(rng):
    for _ in range(20):
        a, b, c = random_field(rng), random_field(rng), random_field(rng)
        total = (
            vf_bracket(a, vf_bracket(b, c))
            + vf_bracket(b, vf_bracket(c, a))
            + vf_bracket(c, vf_bracket(a, b))
        )
        assert total == VectorField.zero(XY)


def test_bracket_matches_operator_commutator(rng):
    for _ in range(10):
        a, b = random_field(rng), random_field(rng)
        A, B = a.as_operator(), b.as_operator()
        assert vf_bracket(a, b).as_operator() == A * B - B * A


def test_euler_field_acts_by_weight():
    chi = euler_field(W, XY)
    g = P("x^3 - y^2")
    assert vf_apply(chi, g) == g
    assert vf_apply(chi, P("x*y")) == P("5/6*x*y")


def test_field_weights():
    d = hamiltonian()
    assert vf_is_wqh(d, W) == Fraction(1, 6)
    assert vf_w_order(d, W) == Fraction(1, 6)
    assert vf_w_order(VectorField.zero(XY), W) == INFINITY
    assert vf_is_wqh(VectorField.zero(XY), W) is None

    mixed = VectorField.of(P("y + x"), Polynomial.zero(XY))
    parts = vf_wqh_parts(mixed, W)
    assert list(parts) == [Fraction(0), Fraction(1, 6)]
    assert sum(parts.values(), VectorField.zero(XY)) == mixed
    assert vf_is_wqh(mixed, W) is None


def test_module_element_round_trip():
    d = hamiltonian()
    assert VectorField.from_module_element(d.as_module_element()) == d


def test_inverse_power_of_coordinate():
    x = P("x")
    result = apply_to_inverse_power(D(0), x, 1)
    assert result == MeroFraction.reduced(P("-1"), x, 2)
    assert result.to_string() == "(-1)/(x)^2"


def test_annihilators_of_cusp_power():
    f = P("x^3 - y^2")
    chi = euler_field(W, XY).as_operator()
    for k in range(1, 4):
        assert apply_to_inverse_power(chi + k, f, k).is_zero()
        assert apply_to_inverse_power(hamiltonian().as_operator(), f, k).is_zero()
        assert not apply_to_inverse_power(chi + k + 1, f, k).is_zero()


def test_fraction_arithmetic():
    f = P("x*y")
    a = MeroFraction.reduced(P("x"), f, 2)
    # x / (xy)^2 does not reduce: x*y does not divide x
    assert a.exponent == 2
    b = MeroFraction.reduced(P("x^2*y^2"), f, 3)
    assert b == MeroFraction.reduced(P("1"), f, 1)
    assert (b - b).is_zero()


def test_apply_to_fraction_is_linear():
    f = P("x^3 - y^2")
    op = M("x") * D(0) + D(1)
    u = MeroFraction.reduced(P("x + y"), f, 2)
    v = MeroFraction.reduced(P("y^2"), f, 1)
    assert apply_to_fraction(op, u + v) == apply_to_fraction(op, u) + apply_to_fraction(op, v)


def test_action_respects_products(rng):
    f = P("x^3 - y^2")
    for _ in range(20):
        A = random_operator(rng)
        B = random_operator(rng)
        lhs = apply_to_inverse_power(A * B, f, 2)
        rhs = apply_to_fraction(A, apply_to_inverse_power(B, f, 2))
        assert lhs == rhs


def test_inverse_power_errors():
    with pytest.raises(ZeroDivisionError):
        apply_to_inverse_power(D(0), Polynomial.zero(XY), 1)
    with pytest.raises(InputError):
        apply_to_inverse_power(D(0), P("x"), 0)
