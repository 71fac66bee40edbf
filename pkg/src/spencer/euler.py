"""
The Euler equation (chi + c) h = psi.

chi acts on the WQH part of weight nu as multiplication by nu, so the
unique solution is h = sum_nu psi_nu / (c + nu) whenever no c + nu vanishes.
"""

from fractions import Fraction
from typing import List, Sequence

from src.algebra.errors import DimensionMismatchError, ResonanceError
from src.algebra.polynomial import Polynomial, Scalar
from src.algebra.weights import WeightVector, wqh_decompose


def euler_solve(c: Scalar, psi: Polynomial, w: WeightVector) -> Polynomial:
    """
    Solve (chi + c) h = psi for the Euler field of w.

    Raises:
        ResonanceError: c + nu = 0 for a weight nu occurring in psi
    """
    c = Fraction(c)
    h = Polynomial.zero(psi.gens)
    for nu, part in wqh_decompose(psi, w).items():
        if c + nu == 0:
            raise ResonanceError(c, nu)
        h = h + part.scale(1 / (c + nu))
    return h


def euler_solve_diagonal(
    constants: Sequence[Scalar],
    psis: Sequence[Polynomial],
    w: WeightVector,
) -> List[Polynomial]:
    """Invert diag(chi + c_i) on a tuple, one Euler equation per component."""
    if len(constants) != len(psis):
        raise DimensionMismatchError(f"{len(constants)} constants for {len(psis)} components")
    return [euler_solve(c, psi, w) for c, psi in zip(constants, psis)]
