"""
Logarithmic derivations, Saito's criterion, adapted bases and annihilators.
"""

import importlib
from fractions import Fraction
from itertools import permutations

import pytest

from src.algebra.errors import (
    DimensionMismatchError,
    FreenessNotCertifiedError,
    InputError,
    NotWQHError,
)
from src.algebra.polynomial import Polynomial
from src.algebra.sampling import random_polynomial
from src.algebra.weights import WeightVector
from src.cli.polynomial_parser import parse_polynomial
from src.logarithmic import (
    adapted_basis,
    ann1_generators,
    ann1_generators_from_derivations,
    annihilation_check,
    coefficient_weight_matrix,
    determinant,
    log_derivations,
    saito_check,
    split_log_derivation,
    theta_basis,
    weight_inequalities,
)
from src.weyl.mero import apply_to_inverse_power
from src.weyl.vector_field import VectorField, euler_field, vf_apply, vf_bracket

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def P(text, gens=XY):
    return parse_polynomial(text, gens)


def test_log_derivations_of_cusp(cusp):
    f, _ = cusp
    S = log_derivations(f)
    assert len(S) >= 2
    for d, a in S:
        assert vf_apply(d, f) == a * f


def test_log_derivations_reject_constants():
    with pytest.raises(InputError):
        log_derivations(P("3"))


def test_theta_basis_of_cusp(cusp):
    f, w = cusp
    theta = theta_basis(f, w)
    assert theta[0][0] == Fraction(1, 6)
    for nu, d in theta:
        assert vf_apply(d, f).is_zero()


def test_theta_basis_needs_weight_one():
    with pytest.raises(NotWQHError):
        theta_basis(P("x^3 - y^2"), WeightVector.of(1, "3/2"))


def test_split_log_derivation(cusp):
    f, w = cusp
    chi = euler_field(w, XY)
    for d, a in log_derivations(f):
        theta, radial = split_log_derivation(d, a, f, w)
        assert vf_apply(theta, f).is_zero()
        assert radial == chi.times(a)
        assert theta + radial == d


def test_saito_check():
    f = P("x*y")
    fields = [VectorField.of(P("x"), P("0")), VectorField.of(P("0"), P("y"))]
    result = saito_check(fields, f)
    assert result.ok and result.unit == 1

    # det = x^2, which x*y does not divide
    result = saito_check([VectorField.of(P("x"), P("0")), VectorField.of(P("0"), P("x"))], f)
    assert not result.ok

    with pytest.raises(InputError):
        saito_check(fields[:1], f)


def test_determinant():
    rows = [[P("x"), P("y")], [P("2*y"), P("3*x^2")]]
    assert determinant(rows) == P("3*x^3 - 2*y^2")
    swapped = [[P("0"), P("1")], [P("1"), P("0")]]
    assert determinant(swapped) == -1


def test_determinant_matches_leibniz_expansion(rng):
    for _ in range(10):
        m = [[random_polynomial(rng, XY, 2, terms=3) for _ in range(3)] for _ in range(3)]
        expected = Polynomial.zero(XY)
        for perm in permutations(range(3)):
            sign = -1 if sum(perm[i] > perm[j] for i in range(3) for j in range(i + 1, 3)) % 2 else 1
            expected = expected + m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]] * sign
        assert determinant(m) == expected


def test_determinant_argument_checks():
    with pytest.raises(InputError):
        determinant([])
    with pytest.raises(DimensionMismatchError):
        determinant([[P("x"), P("y")]])


def test_cusp_adapted_basis(cusp_basis, cusp):
    f, w = cusp
    b = cusp_basis
    assert b.nus == (Fraction(1, 6),)
    assert b.unit == 1 and not b.germ_only
    assert determinant([d.coeffs for d in b.fields()]) == f

    d2 = b.delta(2)
    # proportional to 2y*Dx + 3x^2*Dy
    assert d2.coeffs[0] * P("3*x^2") == d2.coeffs[1] * P("2*y")
    assert vf_bracket(b.chi, d2) == d2.scale(Fraction(1, 6))
    assert vf_apply(d2, f).is_zero()


def test_nonconstant_unit_keeps_germ_basis(monkeypatch):
    f = P("x")
    w = WeightVector.of(1, 0)
    u = P("1 + y")
    plain = adapted_basis(f, w)
    assert plain.unit == 1 and not plain.germ_only

    module = importlib.import_module("src.logarithmic.adapted_basis")
    real = module.theta_basis
    monkeypatch.setattr(
        module, "theta_basis", lambda *args: [(nu, d.times(u)) for nu, d in real(*args)]
    )
    b = adapted_basis(f, w)
    assert b.germ_only
    assert determinant([d.coeffs for d in b.fields()]) == b.unit * f
    assert b.unit == u
    assert b.delta(2) == plain.delta(2).times(u)


def test_cusp_weight_inequalities(cusp_basis):
    assert weight_inequalities(cusp_basis) == [((), Fraction(1)), ((2,), Fraction(5, 6))]


def test_cusp_coefficient_weights(cusp_basis):
    assert coefficient_weight_matrix(cusp_basis) == [
        [Fraction(1, 3), Fraction(1, 2)],
        [Fraction(1, 2), Fraction(2, 3)],
    ]


def test_normal_crossings(xy_basis, xyz_basis):
    for b in (xy_basis, xyz_basis):
        assert all(nu == 0 for nu in b.nus)
        assert b.unit == 1
        assert determinant([d.coeffs for d in b.fields()]) == b.f
        for k in range(1, 6):
            assert all(annihilation_check(ann1_generators(b, k), b.f, k))


def test_normal_crossing_brackets(xyz_basis):
    table = xyz_basis.bracket_constants
    assert set(table) == {(2, 3)}
    assert all(c.is_zero() for c in xyz_basis.bracket(2, 3))
    assert all(c.is_zero() for c in xyz_basis.bracket(3, 2))
    assert all(c.is_zero() for c in xyz_basis.bracket(2, 2))


def test_one_variable_basis():
    f = parse_polynomial("x", ["x"])
    b = adapted_basis(f, WeightVector.of(1))
    assert b.n == 1
    assert b.deltas == ()
    assert b.unit == 1
    assert weight_inequalities(b) == [((), Fraction(1))]


def test_adapted_basis_rejects_non_wqh():
    with pytest.raises(NotWQHError):
        adapted_basis(P("x^2 + y^3"), WeightVector.of(1, 1))


def test_annihilators_of_cusp(cusp_basis):
    f = cusp_basis.f
    for k in range(1, 4):
        ops = ann1_generators(cusp_basis, k)
        assert len(ops) == 2
        assert annihilation_check(ops, f, k) == [True, True]
        general = ann1_generators_from_derivations(log_derivations(f), k)
        assert all(annihilation_check(general, f, k))


def test_wrong_twist_does_not_annihilate(cusp_basis):
    ops = ann1_generators(cusp_basis, 2)
    assert annihilation_check(ops, cusp_basis.f, 1) == [False, True]


def test_annihilator_argument_checks(cusp_basis):
    with pytest.raises(InputError):
        ann1_generators(cusp_basis, -1)
    with pytest.raises(InputError):
        annihilation_check(ann1_generators(cusp_basis, 1), cusp_basis.f, 0)


@pytest.mark.slow
def test_lwqh_surface_basis(lwqh_basis):
    b = lwqh_basis
    f = b.f
    assert b.n == 3
    assert determinant([d.coeffs for d in b.fields()]) == b.unit * f
    for i in range(2, 4):
        assert vf_apply(b.delta(i), f).is_zero()
    assert all(v > 0 for _, v in weight_inequalities(b))


@pytest.mark.slow
def test_lwqh_surface_annihilators(lwqh_basis):
    b = lwqh_basis
    assert b.weight.rank < b.n
    for k in range(1, 4):
        assert all(annihilation_check(ann1_generators(b, k), b.f, k))
        assert not apply_to_inverse_power(b.chi.as_operator() + k + 1, b.f, k).is_zero()


@pytest.mark.slow
def test_generic_arrangement_is_not_certified():
    # four generic planes through the origin are not free
    f = parse_polynomial("x*y*z*(x + y + z)", XYZ)
    with pytest.raises(FreenessNotCertifiedError):
        adapted_basis(f, WeightVector.of("1/4", "1/4", "1/4"))
