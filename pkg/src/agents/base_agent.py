"""
Shared state and error handling for the pipeline stage agents.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from src.algebra.errors import MathematicalError, ToolkitError
from src.algebra.polynomial import Polynomial
from src.algebra.weights import WeightVector
from src.cli.session import SessionConfig
from src.groebner.orders import MonomialOrder
from src.logarithmic.adapted_basis import AdaptedBasis
from src.logarithmic.derivations import LogDerivationSet
from src.report.models import StageResult
from src.spencer.complex import SpencerComplex

logger = logging.getLogger(__name__)

# Stage order of the full pipeline; the position also seeds the stage's generator
STAGES = ("wqh", "logder", "basis", "annihilator", "spencer", "verify", "ext-witness")


@dataclass
class PipelineContext:
    """Session inputs plus the artifacts earlier stages hand to later ones."""

    session: SessionConfig
    f: Polynomial
    weight: WeightVector
    order: MonomialOrder
    derivations: Optional[LogDerivationSet] = None
    basis: Optional[AdaptedBasis] = None
    complexes: Dict[int, SpencerComplex] = field(default_factory=dict)

    @classmethod
    def from_session(cls, session: SessionConfig) -> "PipelineContext":
        return cls(
            session=session,
            f=session.polynomial(),
            weight=session.weight_vector(),
            order=session.monomial_order(),
        )

    def rng_for(self, stage: str) -> np.random.Generator:
        """Generator for one stage, independent of which other stages run."""
        return np.random.default_rng([self.session.seed, STAGES.index(stage)])


class StageAgent:
    """
    Base for stage agents: subclasses implement _run and return the stage data.

    Toolkit errors become stage results: mathematical errors are 'failed',
    input errors are 'error'. Anything else propagates.
    """

    stage = ""

    def __init__(self):
        self.name = type(self).__name__
        logger.info(f"✓ {self.name} initialized")

    def run(self, ctx: PipelineContext) -> StageResult:
        logger.info(f"\n{self.name}: running stage '{self.stage}'...")
        diagnostics = []
        try:
            data = self._run(ctx, diagnostics)
        except ToolkitError as e:
            status = "failed" if isinstance(e, MathematicalError) else "error"
            logger.error(f"✗ {self.name}: {e}")
            return StageResult(stage=self.stage, status=status, diagnostics=diagnostics + [str(e)])
        logger.info(f"✓ {self.name}: stage '{self.stage}' complete")
        return StageResult(stage=self.stage, status="ok", data=data, diagnostics=diagnostics)

    def _run(self, ctx: PipelineContext, diagnostics: list) -> Dict[str, Any]:
        raise NotImplementedError
