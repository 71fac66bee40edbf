"""
Order-one annihilators of 1/f^k.

For a logarithmic field delta with delta(f) = a*f we have
delta(1/f^k) = -k*a/f^k, so delta + k*a kills 1/f^k.
"""

import logging
from typing import List, Sequence

from src.algebra.errors import InputError
from src.algebra.polynomial import Polynomial
from src.logarithmic.adapted_basis import AdaptedBasis
from src.logarithmic.derivations import LogDerivationSet
from src.weyl.mero import apply_to_inverse_power
from src.weyl.operator import DifferentialOperator

logger = logging.getLogger(__name__)


def ann1_generators(b: AdaptedBasis, k: int) -> List[DifferentialOperator]:
    """[chi + k, delta_2, ..., delta_n]; the cofactor of chi is 1 and of every delta_i is 0."""
    if k < 0:
        raise InputError(f"k must be nonnegative, got {k}")
    ops = [b.chi.as_operator() + k]
    ops.extend(d.as_operator() for d in b.deltas)
    return ops


def ann1_generators_from_derivations(S: LogDerivationSet, k: int) -> List[DifferentialOperator]:
    """delta_i + k * a_i for any generating set of logarithmic fields."""
    if k < 0:
        raise InputError(f"k must be nonnegative, got {k}")
    return [
        d.as_operator() + DifferentialOperator.from_polynomial(a.scale(k))
        for d, a in S
    ]


def annihilation_check(ops: Sequence[DifferentialOperator], f: Polynomial, k: int) -> List[bool]:
    """For each operator, whether it sends 1/f^k to zero."""
    if k < 1:
        raise InputError(f"annihilation_check needs k >= 1, got {k}")
    results = []
    for op in ops:
        killed = apply_to_inverse_power(op, f, k).is_zero()
        if not killed:
            logger.debug(f"{op} does not annihilate 1/f^{k}")
        results.append(killed)
    return results
