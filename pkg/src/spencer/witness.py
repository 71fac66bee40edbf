"""
Constructive Ext vanishing for the dual Spencer complex.

A cocycle z at level l splits into its components on labels containing 1
(the G part) and the rest (the H part). The block X_l of phi_l, from 1 u T
to T, is diagonal with entries chi + k - sum_{j in T} nu_j, and no other
entry of a row 1 u T reaches a label without 1. So the preimage
u = (0, h') with h'_T the Euler solution of X_T h'_T = z_{1 u T} reproduces
the G part exactly; the cocycle condition forces the H part to agree.
Every candidate is checked by re-applying phi*_l.
"""

import logging
from dataclasses import dataclass
from typing import Literal, Optional

from src.algebra.errors import InputError, WitnessRefusedError
from src.algebra.polynomial import Polynomial
from src.spencer.complex import CochainTuple, SpencerComplex, diagonal_constants, dual_apply
from src.spencer.euler import euler_solve_diagonal

logger = logging.getLogger(__name__)

WitnessStatus = Literal["found", "cocycle_rejected", "mismatch"]


@dataclass(frozen=True)
class WitnessResult:
    """
    status:
        found            - witness satisfies phi*_l(witness) = z (None at level 0, where z = 0)
        cocycle_rejected - phi*_{l+1}(z) != 0; residual holds phi*_{l+1}(z)
        mismatch         - the candidate failed verification; residual holds z - phi*_l(candidate)
    """

    status: WitnessStatus
    witness: Optional[CochainTuple] = None
    residual: Optional[CochainTuple] = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def ext_witness(C: SpencerComplex, level: int, z: CochainTuple) -> WitnessResult:
    """
    Preimage of the cocycle z under phi*_l, for l = 0..n.

    Raises:
        WitnessRefusedError: the complex has k = 0
        InputError: z is not a cochain of the given level
    """
    if C.k < 1:
        raise WitnessRefusedError(
            "ext_witness needs k >= 1: with k = 0 the diagonal constants -sum(nu) are not positive"
        )
    n = C.n
    if not 0 <= level <= n:
        raise InputError(f"level must be in 0..{n}, got {level}")
    if z.level != level:
        raise InputError(f"cochain has level {z.level}, expected {level}")

    if level < n:
        image = dual_apply(C, level + 1, z)
        if not image.is_zero():
            logger.debug(f"level {level}: input is not a cocycle")
            return WitnessResult("cocycle_rejected", residual=image)

    if level == 0:
        # chi + k is injective for k >= 1, so the only cocycle is zero
        if z.is_zero():
            return WitnessResult("found")
        return WitnessResult("mismatch", residual=z)

    w = C.basis.weight
    gens = C.gens
    constants = diagonal_constants(C, level)
    sources = list(constants)
    solved = euler_solve_diagonal([constants[I] for I in sources], [z[I] for I in sources], w)
    parts = {I[1:]: h for I, h in zip(sources, solved)}
    candidate = CochainTuple(level - 1, gens, {
        J: parts.get(J, Polynomial.zero(gens)) for J in C.targets(level)
    })
    residual = z - dual_apply(C, level, candidate)
    if not residual.is_zero():
        logger.warning(f"level {level}: Euler preimage does not reproduce the cocycle")
        return WitnessResult("mismatch", witness=candidate, residual=residual)
    return WitnessResult("found", witness=candidate)
