"""
Vector fields sum a_i d_i and their weight grading.

A field is WQH of weight nu when every a_i is WQH of weight nu + w_i; the
Euler field chi = sum w_i x_i d_i is WQH of weight 0 and satisfies
[chi, delta] = nu * delta for every WQH field delta of weight nu.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.errors import DimensionMismatchError, InputError
from src.algebra.polynomial import Polynomial, Scalar
from src.algebra.weights import INFINITY, ExtendedRational, WeightVector, w_order, wqh_decompose
from src.groebner.module import ModuleElement
from src.weyl.operator import DifferentialOperator


@dataclass(frozen=True)
class VectorField:
    """delta = sum coeffs[i] * d_i."""

    coeffs: Tuple[Polynomial, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise InputError("a vector field needs at least one coefficient")
        if any(c.gens != coeffs[0].gens for c in coeffs):
            raise DimensionMismatchError("coefficients over different variables")
        if len(coeffs) != coeffs[0].nvars:
            raise DimensionMismatchError(
                f"{len(coeffs)} coefficients for {coeffs[0].nvars} variables"
            )

    @classmethod
    def of(cls, *coeffs: Polynomial) -> "VectorField":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, gens: Sequence[str]) -> "VectorField":
        return cls(tuple(Polynomial.zero(gens) for _ in gens))

    @classmethod
    def partial(cls, gens: Sequence[str], i: int) -> "VectorField":
        return cls(tuple(
            Polynomial.one(gens) if j == i else Polynomial.zero(gens) for j in range(len(gens))
        ))

    @classmethod
    def from_module_element(cls, e: ModuleElement) -> "VectorField":
        return cls(e.components[:len(e.gens)])

    @property
    def gens(self) -> Tuple[str, ...]:
        return self.coeffs[0].gens

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Polynomial:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _check(self, other: "VectorField") -> None:
        if self.gens != other.gens:
            raise DimensionMismatchError(f"fields over {self.gens} and {other.gens}")

    def __add__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "VectorField":
        return VectorField(tuple(-a for a in self))

    def scale(self, c: Scalar) -> "VectorField":
        return VectorField(tuple(a.scale(c) for a in self))

    def times(self, p: Polynomial) -> "VectorField":
        return VectorField(tuple(p * a for a in self))

    def apply(self, g: Polynomial) -> Polynomial:
        return vf_apply(self, g)

    def as_operator(self) -> DifferentialOperator:
        gens = self.gens
        terms = {}
        for i, a in enumerate(self.coeffs):
            beta = tuple(1 if j == i else 0 for j in range(len(gens)))
            terms[beta] = a
        return DifferentialOperator(gens, terms)

    def as_module_element(self) -> ModuleElement:
        return ModuleElement(self.coeffs)

    def to_string(self) -> str:
        return self.as_operator().to_string()

    def __str__(self) -> str:
        return self.to_string()


def vf_apply(d: VectorField, g: Polynomial) -> Polynomial:
    """delta(g) = sum a_i * dg/dx_i."""
    if d.gens != g.gens:
        raise DimensionMismatchError(f"field over {d.gens}, polynomial over {g.gens}")
    total = Polynomial.zero(g.gens)
    for i, a in enumerate(d.coeffs):
        if not a.is_zero():
            total = total + a * g.derivative(i)
    return total


def vf_bracket(d: VectorField, e: VectorField) -> VectorField:
    """[d, e] with coefficients d(b_j) - e(a_j)."""
    d._check(e)
    return VectorField(tuple(vf_apply(d, b) - vf_apply(e, a) for a, b in zip(d, e)))


def _check_dims(d: VectorField, w: WeightVector) -> None:
    if d.nvars != len(w):
        raise DimensionMismatchError(
            f"field has {d.nvars} variables but weight vector has length {len(w)}"
        )


def vf_w_order(d: VectorField, w: WeightVector) -> ExtendedRational:
    """min_i (ord_w(a_i) - w_i); +inf for the zero field."""
    _check_dims(d, w)
    orders = [w_order(a, w) - w[i] for i, a in enumerate(d.coeffs) if not a.is_zero()]
    return min(orders) if orders else INFINITY


def vf_wqh_parts(d: VectorField, w: WeightVector) -> Dict[Fraction, VectorField]:
    """WQH parts of d, keys increasing; the parts sum to d."""
    _check_dims(d, w)
    gens = d.gens
    parts: Dict[Fraction, List[Polynomial]] = {}
    for i, a in enumerate(d.coeffs):
        for nu, piece in wqh_decompose(a, w).items():
            slot = parts.setdefault(nu - w[i], [Polynomial.zero(gens) for _ in gens])
            slot[i] = piece
    return {nu: VectorField(tuple(parts[nu])) for nu in sorted(parts)}


def vf_is_wqh(d: VectorField, w: WeightVector) -> Optional[Fraction]:
    """The weight of d if it is WQH, else None (also None for the zero field)."""
    parts = vf_wqh_parts(d, w)
    if len(parts) != 1:
        return None
    return next(iter(parts))


def euler_field(w: WeightVector, gens: Sequence[str]) -> VectorField:
    """chi = sum w_i x_i d_i."""
    if len(gens) != len(w):
        raise DimensionMismatchError(f"{len(gens)} variables for a weight vector of length {len(w)}")
    return VectorField(tuple(
        Polynomial.variable(gens, i).scale(w[i]) for i in range(len(gens))
    ))
