"""
WQH Agent - checks weak quasi-homogeneity and normalizes the weight to 1
"""

import logging
from typing import Any, Dict

from src.agents.base_agent import PipelineContext, StageAgent
from src.algebra.errors import InputError, NotWQHError
from src.algebra.polynomial import format_rational
from src.algebra.weights import is_wqh, normalize_weight, w_order, weight_rank, wqh_decompose

logger = logging.getLogger(__name__)


class WQHAgent(StageAgent):
    """Decides whether f is WQH for the session weights."""

    stage = "wqh"

    def _run(self, ctx: PipelineContext, diagnostics: list) -> Dict[str, Any]:
        f, w = ctx.f, ctx.weight
        if f.is_constant():
            raise InputError(f"f must be nonconstant, got {f}")
        check = is_wqh(f, w)
        if check.weight is None:
            parts = wqh_decompose(f, w)
            detail = "; ".join(f"{format_rational(nu)}: {p}" for nu, p in parts.items())
            raise NotWQHError(f"f = {f} is not WQH for w = ({', '.join(w.to_strings())}); parts {detail}")

        normalized = normalize_weight(f, w)
        if normalized != w:
            logger.info(f"  Weight {check.weight} rescaled to 1: w = {normalized.to_strings()}")
            diagnostics.append(
                f"f has weight {format_rational(check.weight)}; weights rescaled to "
                f"({', '.join(normalized.to_strings())})"
            )
        ctx.weight = normalized

        logger.info(f"  f = {f} is WQH of weight {check.weight}")
        logger.info(f"  r(w) = {weight_rank(normalized)} of n = {f.nvars}")
        return {
            "f": f.to_string(),
            "weight": format_rational(check.weight),
            "weights": w.to_strings(),
            "normalized_weights": normalized.to_strings(),
            "w_order": format_rational(w_order(f, normalized)),
            "weight_rank": weight_rank(normalized),
            "nvars": f.nvars,
        }
