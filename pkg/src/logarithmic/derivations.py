"""
Logarithmic derivations of a divisor f = 0.

A derivation delta is logarithmic when delta(f) = a * f for some cofactor a.
These are the syzygies (a_1, ..., a_n, a) of (d_1 f, ..., d_n f, -f).
The fields with delta(f) = 0 form the submodule Theta_f; for f WQH of
weight 1 every logarithmic delta splits as (delta - a*chi) + a*chi with the
first summand in Theta_f.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

from src.algebra.errors import InconsistencyError, InputError, NotWQHError
from src.algebra.polynomial import Polynomial
from src.algebra.weights import WeightVector, is_wqh
from src.groebner.orders import DEGREVLEX, MonomialOrder
from src.groebner.syzygy import primitive_element, syzygy_basis
from src.weyl.vector_field import VectorField, euler_field, vf_apply, vf_wqh_parts

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LogDerivationSet:
    """Generators delta_i of Der(-log f) with delta_i(f) = cofactors[i] * f."""

    f: Polynomial
    fields: Tuple[VectorField, ...]
    cofactors: Tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.fields) != len(self.cofactors):
            raise InputError("one cofactor per field is required")
        for d, a in zip(self.fields, self.cofactors):
            if vf_apply(d, self.f) != a * self.f:
                raise InconsistencyError("field is not logarithmic with the stated cofactor", str(d))

    def __len__(self) -> int:
        return len(self.fields)

    def __iter__(self) -> Iterator[Tuple[VectorField, Polynomial]]:
        return iter(zip(self.fields, self.cofactors))


def log_derivations(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> LogDerivationSet:
    """
    Generators of the logarithmic derivations of f, with their cofactors.

    Args:
        f: nonconstant polynomial, assumed reduced
        order: monomial order used for the syzygy computation

    Returns:
        LogDerivationSet checked field by field
    """
    if f.is_constant():
        raise InputError(f"f must be nonconstant, got {f}")
    n = f.nvars
    syzygies = syzygy_basis(list(f.gradient()) + [-f], order)
    fields = []
    cofactors = []
    for s in syzygies:
        fields.append(VectorField.from_module_element(s))
        cofactors.append(s[n])
    logger.debug(f"Der(-log f) for f = {f}: {len(fields)} generators")
    return LogDerivationSet(f, tuple(fields), tuple(cofactors))


def theta_basis(
    f: Polynomial,
    w: WeightVector,
    order: MonomialOrder = DEGREVLEX,
) -> List[Tuple[Fraction, VectorField]]:
    """
    WQH generators of Theta_f = {delta : delta(f) = 0}, paired with their weights.

    The WQH parts of the syzygies of the gradient still generate, since the
    syzygy module is graded. Duplicates (up to a scalar) are dropped; the
    result is sorted by weight, first appearance breaking ties.

    Raises:
        NotWQHError: f is not WQH of weight 1 for w
    """
    check = is_wqh(f, w)
    if check.weight != 1:
        raise NotWQHError(f"{f} must be WQH of weight 1 for w = {w.to_strings()}")
    gradient = f.gradient()
    if all(g.is_zero() for g in gradient):
        raise InputError(f"f must be nonconstant, got {f}")
    found: List[Tuple[Fraction, int, VectorField]] = []
    seen = set()
    if f.nvars > 1:
        for s in syzygy_basis(list(gradient), order):
            for nu, part in vf_wqh_parts(VectorField(s.components), w).items():
                part = VectorField(primitive_element(part.as_module_element()).components)
                if part.coeffs in seen:
                    continue
                seen.add(part.coeffs)
                found.append((nu, len(found), part))
    found.sort(key=lambda t: (t[0], t[1]))
    logger.debug(f"Theta_f: {len(found)} WQH generators, weights {[str(t[0]) for t in found]}")
    return [(nu, d) for nu, _, d in found]


def split_log_derivation(
    d: VectorField,
    a: Polynomial,
    f: Polynomial,
    w: WeightVector,
) -> Tuple[VectorField, VectorField]:
    """
    Split a logarithmic field along Der(-log f) = Theta_f + O*chi.

    Returns:
        (d - a*chi, a*chi); the first part kills f

    Raises:
        NotWQHError: f is not WQH of weight 1
        InconsistencyError: d(f) != a*f, or the first part does not kill f
    """
    if is_wqh(f, w).weight != 1:
        raise NotWQHError(f"{f} must be WQH of weight 1 for w = {w.to_strings()}")
    if vf_apply(d, f) != a * f:
        raise InconsistencyError("field is not logarithmic with the stated cofactor", str(d))
    radial = euler_field(w, f.gens).times(a)
    theta = d - radial
    if not vf_apply(theta, f).is_zero():
        raise InconsistencyError("Theta_f part does not annihilate f", str(theta))
    return theta, radial
