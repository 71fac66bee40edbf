"""
Annihilator Agent - order-1 annihilators of 1/f^k with a check table
"""

import logging
from typing import Any, Dict, List, Sequence

from src.agents.base_agent import PipelineContext, StageAgent
from src.algebra.errors import InconsistencyError
from src.algebra.polynomial import Polynomial
from src.logarithmic.annihilators import (
    ann1_generators,
    ann1_generators_from_derivations,
    annihilation_check,
)
from src.weyl.operator import DifferentialOperator, op_apply

logger = logging.getLogger(__name__)


def _check(ops: Sequence[DifferentialOperator], f: Polynomial, k: int) -> List[bool]:
    if k == 0:
        one = Polynomial.one(f.gens)
        return [op_apply(op, one).is_zero() for op in ops]
    return annihilation_check(ops, f, k)


class AnnihilatorAgent(StageAgent):
    """Builds chi + k, delta_2..delta_n per k and applies them to 1/f^k."""

    stage = "annihilator"

    def _run(self, ctx: PipelineContext, diagnostics: list) -> Dict[str, Any]:
        tables: Dict[str, Dict[str, bool]] = {}
        general: Dict[str, Dict[str, bool]] = {}
        failures = []
        for k in ctx.session.k:
            ops = ann1_generators(ctx.basis, k)
            checks = _check(ops, ctx.f, k)
            tables[f"k={k}"] = {op.to_string(): ok for op, ok in zip(ops, checks)}
            failures.extend(f"k={k}: {op}" for op, ok in zip(ops, checks) if not ok)
            logger.info(f"  k={k}: {sum(checks)}/{len(checks)} generators annihilate 1/f^{k}")

            if ctx.derivations is not None:
                ops = ann1_generators_from_derivations(ctx.derivations, k)
                checks = _check(ops, ctx.f, k)
                general[f"k={k}"] = {op.to_string(): ok for op, ok in zip(ops, checks)}
                failures.extend(f"k={k}: {op}" for op, ok in zip(ops, checks) if not ok)

        if failures:
            raise InconsistencyError("operators do not annihilate 1/f^k", "; ".join(failures))
        data: Dict[str, Any] = {"table": tables}
        if general:
            data["from_derivations"] = general
        return data
