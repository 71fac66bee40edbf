"""
Adapted bases {chi, delta_2, ..., delta_n} of Der(-log f) for a WQH free divisor.

The delta_i kill f, each is WQH of weight nu_i, and the coefficient
determinant is exactly f. Freeness is certified by Saito's criterion on a
subset of WQH generators of Theta_f; a failed search means "not certified",
never "not free".
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.errors import (
    FreenessNotCertifiedError,
    InconsistencyError,
    InputError,
    NotWQHError,
)
from src.algebra.polynomial import Polynomial
from src.algebra.weights import WeightVector, is_wqh
from src.groebner.orders import DEGREVLEX, MonomialOrder
from src.groebner.syzygy import ModuleLifter
from src.logarithmic.derivations import theta_basis
from src.logarithmic.saito import SaitoResult, determinant, saito_check
from src.weyl.vector_field import VectorField, euler_field, vf_apply, vf_bracket

logger = logging.getLogger(__name__)

# (i, j) with 2 <= i < j <= n  ->  coefficients of delta_2..delta_n in [delta_i, delta_j]
BracketTable = Dict[Tuple[int, int], Tuple[Polynomial, ...]]


@dataclass(frozen=True)
class AdaptedBasis:
    """
    chi = delta_1 and delta_2..delta_n; indices below are 1-based as in the
    wedge labels of the Spencer complex.

    When the Saito unit is a constant, delta_2 is rescaled so that
    det(chi, delta_2, ..., delta_n) = f and unit = 1. A unit that is not
    constant (possible only when some weight is zero) cannot be divided out
    over the polynomial ring: the fields are kept as found, det = unit * f
    with unit(0) != 0, and germ_only is set because the basis is then
    certified only as a basis of the germ at the origin.
    """

    f: Polynomial
    weight: WeightVector
    chi: VectorField
    deltas: Tuple[VectorField, ...]
    nus: Tuple[Fraction, ...]
    bracket_constants: Optional[BracketTable]
    unit: Polynomial
    germ_only: bool = False
    selection: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def n(self) -> int:
        return self.f.nvars

    @property
    def gens(self) -> Tuple[str, ...]:
        return self.f.gens

    def fields(self) -> List[VectorField]:
        return [self.chi, *self.deltas]

    def delta(self, i: int) -> VectorField:
        """delta_i for i >= 2; delta_1 is chi."""
        return self.chi if i == 1 else self.deltas[i - 2]

    def nu(self, i: int) -> Fraction:
        """nu_i; chi has weight 0."""
        return Fraction(0) if i == 1 else self.nus[i - 2]

    def bracket(self, i: int, j: int) -> Tuple[Polynomial, ...]:
        """Coefficients c_l (l = 2..n) with [delta_i, delta_j] = sum c_l delta_l, for i, j >= 2."""
        if self.bracket_constants is None:
            raise InputError("adapted basis has no bracket table")
        if i == j:
            return tuple(Polynomial.zero(self.gens) for _ in self.deltas)
        if i > j:
            return tuple(-c for c in self.bracket_constants[(j, i)])
        return self.bracket_constants[(i, j)]


def _select(
    f: Polynomial,
    w: WeightVector,
    chi: VectorField,
    candidates: Sequence[Tuple[Fraction, VectorField]],
) -> Tuple[Tuple[int, ...], SaitoResult]:
    n = f.nvars
    target = 1 - sum(w, Fraction(0))
    tried = 0
    for subset in combinations(range(len(candidates)), n - 1):
        if sum((candidates[i][0] for i in subset), Fraction(0)) != target:
            continue
        tried += 1
        result = saito_check([chi] + [candidates[i][1] for i in subset], f)
        if result.ok:
            logger.debug(f"Saito certificate after {tried} weight-viable subsets: {subset}")
            return subset, result
    raise FreenessNotCertifiedError(
        f"freeness not certified: none of {tried} weight-viable subsets of "
        f"{len(candidates)} WQH generators passed Saito's criterion"
    )


def bracket_table(deltas: Sequence[VectorField], order: MonomialOrder = DEGREVLEX) -> BracketTable:
    """Express every [delta_i, delta_j] (i < j) in the basis delta_2..delta_n."""
    table: BracketTable = {}
    if len(deltas) < 2:
        return table
    gens = deltas[0].gens
    lifter = ModuleLifter([d.as_module_element() for d in deltas], order)
    for a, b in combinations(range(len(deltas)), 2):
        br = vf_bracket(deltas[a], deltas[b])
        if br.is_zero():
            coeffs = tuple(Polynomial.zero(gens) for _ in deltas)
        else:
            lifted = lifter.lift(br.as_module_element())
            if lifted is None:
                raise InconsistencyError(
                    f"[delta_{a + 2}, delta_{b + 2}] is not in the span of delta_2..delta_n",
                    str(br),
                )
            coeffs = tuple(lifted)
        table[(a + 2, b + 2)] = coeffs
    return table


def adapted_basis(
    f: Polynomial,
    w: WeightVector,
    order: MonomialOrder = DEGREVLEX,
) -> AdaptedBasis:
    """
    Build and verify an adapted basis.

    Args:
        f: WQH of weight 1 for w, with f = 0 free at the origin
        w: weight vector
        order: monomial order for the syzygy and lift computations

    Returns:
        AdaptedBasis with every identity checked exactly

    Raises:
        NotWQHError: f is not WQH of weight 1
        FreenessNotCertifiedError: no subset passes Saito's criterion
        InconsistencyError: a bracket does not lift, or a verified identity fails
    """
    if is_wqh(f, w).weight != 1:
        raise NotWQHError(f"{f} is not WQH of weight 1 for w = {w.to_strings()}")
    gens = f.gens
    chi = euler_field(w, gens)
    candidates = theta_basis(f, w, order)
    subset, saito = _select(f, w, chi, candidates)

    deltas = [candidates[i][1] for i in subset]
    nus = [candidates[i][0] for i in subset]
    unit = saito.unit
    germ_only = False
    if unit.is_constant():
        # in one variable chi alone is the basis and cannot be rescaled
        if deltas:
            deltas[0] = deltas[0].scale(1 / unit.evaluate_at_zero())
            unit = Polynomial.one(gens)
    else:
        germ_only = True
        logger.warning(f"Saito unit {unit} is not constant; basis is certified as a germ at 0 only")

    for d, nu in zip(deltas, nus):
        if not vf_apply(d, f).is_zero():
            raise InconsistencyError("delta does not annihilate f", str(d))
        if vf_bracket(chi, d) != d.scale(nu):
            raise InconsistencyError(f"[chi, delta] != {nu} * delta", str(d))
    det = determinant([chi.coeffs] + [d.coeffs for d in deltas])
    if det != unit * f:
        raise InconsistencyError("adapted determinant differs from unit * f", str(det))

    table = bracket_table(deltas, order)
    logger.debug(f"Adapted basis for {f}: nus = {[str(nu) for nu in nus]}, selection {subset}")
    return AdaptedBasis(
        f=f,
        weight=w,
        chi=chi,
        deltas=tuple(deltas),
        nus=tuple(nus),
        bracket_constants=table,
        unit=unit,
        germ_only=germ_only,
        selection=tuple(subset),
    )


def weight_inequalities(b: AdaptedBasis) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """
    Values 1 - sum_{j in J} nu_j for every J subset of {2..n}, smallest J first.

    Raises:
        InconsistencyError: some value is not strictly positive
    """
    labels = list(range(2, b.n + 1))
    values = []
    for size in range(len(labels) + 1):
        for J in combinations(labels, size):
            values.append((J, 1 - sum((b.nu(j) for j in J), Fraction(0))))
    bad = [(J, v) for J, v in values if v <= 0]
    if bad:
        raise InconsistencyError(
            "weight inequality violated",
            ", ".join(f"J={list(J)}: {v}" for J, v in bad),
        )
    return values


def coefficient_weight_matrix(b: AdaptedBasis) -> List[List[Optional[Fraction]]]:
    """Weight nu_i + w_j of each coefficient a_ij of the adapted basis; None where a_ij = 0."""
    rows = []
    for i, d in enumerate(b.fields(), start=1):
        rows.append([
            None if a.is_zero() else b.nu(i) + b.weight[j]
            for j, a in enumerate(d.coeffs)
        ])
    return rows
