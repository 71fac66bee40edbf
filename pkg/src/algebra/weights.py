"""
Weight vectors and the w-grading of polynomials.

A weight vector w gives x_i the weight w_i. The w-order of a polynomial is
the minimum of alpha.w over its monomials, and every polynomial splits
uniquely into weakly quasi-homogeneous (WQH) parts, one per weight.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, NamedTuple, Optional, Sequence, Tuple, Union

from src.algebra.errors import DimensionMismatchError, InputError, NotWQHError
from src.algebra.polynomial import Exponent, Polynomial, format_rational

# +infinity is reserved for the order of the zero polynomial
INFINITY = math.inf
ExtendedRational = Union[Fraction, float]


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative rational weights, at least one strictly positive."""

    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if not ws:
            raise InputError("weight vector must be nonempty")
        if any(w < 0 for w in ws):
            raise InputError(f"weights must be nonnegative, got {self.to_strings()}")
        if not any(w > 0 for w in ws):
            raise InputError("at least one weight must be strictly positive")

    @classmethod
    def of(cls, *weights: Union[int, str, Fraction]) -> "WeightVector":
        return cls(tuple(Fraction(w) for w in weights))

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "WeightVector":
        try:
            return cls(tuple(Fraction(s) for s in items))
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"invalid weight entry in {list(items)}: {e}")

    def to_strings(self):
        return [format_rational(w) for w in self.weights]

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        return self.weights[i]

    def __iter__(self):
        return iter(self.weights)

    def dot(self, exps: Exponent) -> Fraction:
        return sum((w * e for w, e in zip(self.weights, exps)), Fraction(0))

    @property
    def rank(self) -> int:
        """r(w): the number of nonzero coordinates."""
        return sum(1 for w in self.weights if w != 0)

    def scaled(self, factor: Fraction) -> "WeightVector":
        return WeightVector(tuple(w * factor for w in self.weights))


class WQHCheck(NamedTuple):
    """Result of is_wqh: the common weight, or None; is_zero flags the zero polynomial."""

    weight: Optional[Fraction]
    is_zero: bool = False

    def __bool__(self) -> bool:
        return self.weight is not None


def _check_dims(p: Polynomial, w: WeightVector) -> None:
    if p.nvars != len(w):
        raise DimensionMismatchError(
            f"polynomial has {p.nvars} variables but weight vector has length {len(w)}"
        )


def w_order(p: Polynomial, w: WeightVector) -> ExtendedRational:
    """Minimum of alpha.w over the monomials of p; +inf for p = 0."""
    _check_dims(p, w)
    if p.is_zero():
        return INFINITY
    return min(w.dot(exps) for exps in p.terms)


def wqh_decompose(p: Polynomial, w: WeightVector) -> Dict[Fraction, Polynomial]:
    """
    Split p into its WQH parts.

    Returns:
        dict weight -> part, keys in strictly increasing order; parts sum to p
    """
    _check_dims(p, w)
    buckets: Dict[Fraction, Dict[Exponent, Fraction]] = {}
    for exps, c in p.terms.items():
        buckets.setdefault(w.dot(exps), {})[exps] = c
    return {
        nu: Polynomial(p.gens, buckets[nu])
        for nu in sorted(buckets)
    }


def is_wqh(p: Polynomial, w: WeightVector) -> WQHCheck:
    """Common weight of all monomials of p, if there is one."""
    _check_dims(p, w)
    if p.is_zero():
        return WQHCheck(None, is_zero=True)
    weights = {w.dot(exps) for exps in p.terms}
    if len(weights) == 1:
        return WQHCheck(weights.pop())
    return WQHCheck(None)


def normalize_weight(f: Polynomial, w: WeightVector) -> WeightVector:
    """Rescale w so that f becomes WQH of weight 1."""
    check = is_wqh(f, w)
    if check.weight is None:
        raise NotWQHError(f"{f} is not WQH for w = {w.to_strings()}")
    if check.weight <= 0:
        raise NotWQHError(
            f"{f} has weight {check.weight} for w = {w.to_strings()}; need a positive weight"
        )
    return w.scaled(1 / check.weight)


def weight_rank(w: WeightVector) -> int:
    return w.rank


def in_filtration(p: Polynomial, w: WeightVector, nu: Fraction) -> bool:
    """Membership in F_nu = {g : ord_w(g) >= nu}."""
    return w_order(p, w) >= nu
