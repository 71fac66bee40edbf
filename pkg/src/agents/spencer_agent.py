"""
Spencer Agent - operator matrices of the logarithmic Spencer complex per k
"""

import logging
from typing import Any, Dict, List

from config.settings import settings
from src.agents.base_agent import PipelineContext, StageAgent
from src.algebra.errors import InconsistencyError
from src.algebra.polynomial import format_rational
from src.spencer.complex import (
    SpencerComplex,
    diagonal_constants,
    dual_apply,
    operator_row,
    random_cochain,
    spencer_matrices,
    verify_complex,
)
from src.spencer.wedge import format_wedge

logger = logging.getLogger(__name__)


def complexes_for(ctx: PipelineContext) -> List[SpencerComplex]:
    """The complex of every session k, built once and cached on the context."""
    for k in ctx.session.k:
        if k not in ctx.complexes:
            ctx.complexes[k] = spencer_matrices(ctx.basis, k)
    return [ctx.complexes[k] for k in ctx.session.k]


class SpencerAgent(StageAgent):
    """Renders phi_1..phi_n and the diagonal blocks X_l."""

    stage = "spencer"

    def _run(self, ctx: PipelineContext, diagnostics: list) -> Dict[str, Any]:
        data: Dict[str, Any] = {}
        for C in complexes_for(ctx):
            levels = {}
            for level in range(1, C.n + 1):
                R, S = C.blocks(level)
                constants = diagonal_constants(C, level)
                levels[str(level)] = {
                    "entries": C.nonzero_entries(level),
                    "blocks": {
                        "R": [format_wedge(I) for I in R],
                        "S": [format_wedge(I) for I in S],
                    },
                    "diagonal_constants": {
                        format_wedge(I): format_rational(c) for I, c in constants.items()
                    },
                    "rows": {
                        format_wedge(I): operator_row(C, level, I) for I in C.sources(level)
                    },
                }
            data[f"k={C.k}"] = levels
            logger.info(
                f"  k={C.k}: "
                + ", ".join(f"phi_{lv} {C.nonzero_entries(lv)} entries" for lv in range(1, C.n + 1))
            )
        return data


class VerifyAgent(StageAgent):
    """Checks phi_{l-1} o phi_l = 0 exactly and the dual identity on random tuples."""

    stage = "verify"

    def _run(self, ctx: PipelineContext, diagnostics: list) -> Dict[str, Any]:
        rng = ctx.rng_for(self.stage)
        samples = ctx.session.samples
        degree = ctx.session.degree_bound
        data: Dict[str, Any] = {}
        failures = []
        for C in complexes_for(ctx):
            exact = verify_complex(C, max_workers=settings.MAX_WORKERS)
            dual_checks = 0
            for level in range(2, C.n + 1):
                for _ in range(samples):
                    u = random_cochain(C, level - 2, rng, degree, settings.RANDOM_TERMS)
                    if not dual_apply(C, level, dual_apply(C, level - 1, u)).is_zero():
                        failures.append(f"k={C.k}: phi*_{level} o phi*_{level - 1} != 0")
                    dual_checks += 1
            if not exact:
                failures.append(f"k={C.k}: phi_(l-1) o phi_l != 0")
            marker = "✓" if exact else "✗"
            logger.info(f"  {marker} k={C.k}: d o d = 0 exactly; {dual_checks} dual checks")
            data[f"k={C.k}"] = {"d_squared_zero": exact, "dual_checks": dual_checks}

        if failures:
            raise InconsistencyError("the Spencer complex is not a complex", "; ".join(failures))
        return data
