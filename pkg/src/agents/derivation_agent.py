"""
Derivation Agent - generators of Der(-log f) and their splitting along chi
"""

import logging
from typing import Any, Dict

from src.agents.base_agent import PipelineContext, StageAgent
from src.algebra.polynomial import format_rational
from src.algebra.weights import is_wqh
from src.logarithmic.derivations import log_derivations, split_log_derivation, theta_basis

logger = logging.getLogger(__name__)


class DerivationAgent(StageAgent):
    """Computes logarithmic derivations with cofactors."""

    stage = "logder"

    def _run(self, ctx: PipelineContext, diagnostics: list) -> Dict[str, Any]:
        S = log_derivations(ctx.f, ctx.order)
        ctx.derivations = S
        logger.info(f"  {len(S)} generators of Der(-log f)")

        generators = [
            {"field": d.to_string(), "cofactor": a.to_string()}
            for d, a in S
        ]
        data: Dict[str, Any] = {"generators": generators}

        # the splitting exists only once f has weight 1
        if is_wqh(ctx.f, ctx.weight).weight == 1:
            for entry, (d, a) in zip(generators, S):
                theta, radial = split_log_derivation(d, a, ctx.f, ctx.weight)
                entry["theta_part"] = theta.to_string()
                entry["euler_part"] = radial.to_string()
            data["theta_generators"] = [
                {"weight": format_rational(nu), "field": d.to_string()}
                for nu, d in theta_basis(ctx.f, ctx.weight, ctx.order)
            ]
        else:
            diagnostics.append("f is not WQH of weight 1 for the current weights; splitting skipped")
        return data
