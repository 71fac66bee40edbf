"""
Basis Agent - certified adapted basis, weight inequalities and coefficient weights
"""

import logging
from typing import Any, Dict, Optional

from src.agents.base_agent import PipelineContext, StageAgent
from src.algebra.polynomial import format_rational
from src.logarithmic.adapted_basis import (
    adapted_basis,
    coefficient_weight_matrix,
    weight_inequalities,
)
from src.logarithmic.saito import determinant
from src.spencer.wedge import format_wedge

logger = logging.getLogger(__name__)


def _weight_or_none(value) -> Optional[str]:
    return None if value is None else format_rational(value)


class BasisAgent(StageAgent):
    """Finds {chi, delta_2..delta_n} and checks 1 - sum nu_J > 0."""

    stage = "basis"

    def _run(self, ctx: PipelineContext, diagnostics: list) -> Dict[str, Any]:
        b = adapted_basis(ctx.f, ctx.weight, ctx.order)
        ctx.basis = b
        det = determinant([d.coeffs for d in b.fields()])

        logger.info(f"  chi = {b.chi}")
        for i in range(2, b.n + 1):
            logger.info(f"  delta_{i} = {b.delta(i)}  (nu = {b.nu(i)})")
        logger.info(f"  det = {det}")
        if b.germ_only:
            diagnostics.append(f"Saito unit {b.unit} is not constant; basis certified at the origin only")

        data: Dict[str, Any] = {
            "chi": b.chi.to_string(),
            "deltas": [
                {"index": i, "field": b.delta(i).to_string(), "nu": format_rational(b.nu(i))}
                for i in range(2, b.n + 1)
            ],
            "determinant": det.to_string(),
            "unit": b.unit.to_string(),
            "germ_only": b.germ_only,
            "selection": list(b.selection),
            "brackets": {
                format_wedge(pair): [c.to_string() for c in coeffs]
                for pair, coeffs in sorted(b.bracket_constants.items())
            },
            "coefficient_weights": [
                [_weight_or_none(v) for v in row] for row in coefficient_weight_matrix(b)
            ],
        }

        inequalities = weight_inequalities(b)
        data["weight_inequalities"] = {format_wedge(J): format_rational(v) for J, v in inequalities}
        logger.info(f"  ✓ {len(inequalities)} weight inequalities positive")
        return data
