"""
Saito's criterion: n logarithmic fields form a basis of Der(-log f) when the
determinant of their coefficient matrix is a unit multiple of f.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from src.algebra.errors import DimensionMismatchError, InputError
from src.algebra.polynomial import Polynomial, polynomial_ring
from src.weyl.vector_field import VectorField

logger = logging.getLogger(__name__)


def determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square matrix over QQ[gens], via sympy's DomainMatrix."""
    n = len(rows)
    if n == 0:
        raise InputError("determinant of an empty matrix")
    if any(len(r) != n for r in rows):
        raise DimensionMismatchError("determinant needs a square matrix")
    gens = rows[0][0].gens
    if any(p.gens != gens for r in rows for p in r):
        raise DimensionMismatchError("matrix entries over different variables")
    R = polynomial_ring(gens)
    matrix = DomainMatrix([[p.element for p in r] for r in rows], (n, n), R.to_domain())
    return Polynomial(gens, element=matrix.det())


@dataclass(frozen=True)
class SaitoResult:
    """det = unit * f; ok when the unit does not vanish at the origin."""

    ok: bool
    unit: Polynomial
    det: Polynomial


def saito_check(fields: Sequence[VectorField], f: Polynomial) -> SaitoResult:
    """
    Test n fields against Saito's criterion at the origin.

    Args:
        fields: exactly n vector fields over the variables of f
        f: the divisor

    Returns:
        SaitoResult; a zero determinant or a determinant that f does not
        divide gives ok = False with unit 0
    """
    n = f.nvars
    if len(fields) != n:
        raise InputError(f"saito_check needs {n} fields, got {len(fields)}")
    for d in fields:
        if d.gens != f.gens:
            raise DimensionMismatchError(f"field over {d.gens}, f over {f.gens}")
    det = determinant([d.coeffs for d in fields])
    zero = Polynomial.zero(f.gens)
    if det.is_zero():
        return SaitoResult(False, zero, det)
    unit: Optional[Polynomial] = det.exact_divide(f)
    if unit is None:
        return SaitoResult(False, zero, det)
    ok = unit.evaluate_at_zero() != 0
    logger.debug(f"Saito determinant {det} = ({unit}) * f, ok={ok}")
    return SaitoResult(ok, unit, det)
