"""
Pipeline Orchestrator - runs the stage agents for a command and assembles the report
"""

import logging
from typing import Dict, List

from config.settings import settings
from src.agents.annihilator_agent import AnnihilatorAgent
from src.agents.base_agent import PipelineContext, StageAgent
from src.agents.basis_agent import BasisAgent
from src.agents.derivation_agent import DerivationAgent
from src.agents.spencer_agent import SpencerAgent, VerifyAgent
from src.agents.witness_agent import WitnessAgent
from src.agents.wqh_agent import WQHAgent
from src.algebra.errors import InputError
from src.cli.session import SessionConfig
from src.logging.structured_logger import StructuredLogger
from src.report.models import Report, StageResult
from src.utils.file_handler import FileHandler

logger = logging.getLogger(__name__)

# Stages each command runs, prerequisites first
PLANS: Dict[str, List[str]] = {
    "wqh": ["wqh"],
    "logder": ["wqh", "logder"],
    "basis": ["wqh", "basis"],
    "annihilator": ["wqh", "basis", "annihilator"],
    "spencer": ["wqh", "basis", "spencer"],
    "verify": ["wqh", "basis", "verify"],
    "ext-witness": ["wqh", "basis", "ext-witness"],
    "all": ["wqh", "logder", "basis", "annihilator", "spencer", "verify", "ext-witness"],
}

COMMANDS = tuple(PLANS)


def exit_code_for(stages: List[StageResult]) -> int:
    """2 if any stage hit an input error, 1 if any failed a mathematical check, else 0."""
    statuses = {s.status for s in stages}
    if "error" in statuses:
        return 2
    if "failed" in statuses:
        return 1
    return 0


class PipelineOrchestrator:
    """Runs stage agents in dependency order."""

    def __init__(self):
        """Initialize orchestrator with all agents."""
        logger.info("=" * 70)
        logger.info("INITIALIZING WQH PIPELINE")
        logger.info("=" * 70)

        agents: List[StageAgent] = [
            WQHAgent(),
            DerivationAgent(),
            BasisAgent(),
            AnnihilatorAgent(),
            SpencerAgent(),
            VerifyAgent(),
            WitnessAgent(),
        ]
        self.agents: Dict[str, StageAgent] = {a.stage: a for a in agents}
        self.structured_logger = StructuredLogger() if settings.STRUCTURED_LOGGING else None
        logger.info("✓ All agents initialized")

    def run(self, command: str, session: SessionConfig) -> Report:
        """
        Run one command on a session.

        Args:
            command: one of COMMANDS
            session: validated session config

        Returns:
            Report with one result per planned stage; stages after a failure
            are marked skipped
        """
        if command not in PLANS:
            raise InputError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")

        logger.info("=" * 70)
        logger.info(f"{command.upper()}: {session.name}")
        logger.info("=" * 70)

        ctx = PipelineContext.from_session(session)
        stages: List[StageResult] = []
        blocked = None
        for step, stage in enumerate(PLANS[command], start=1):
            if blocked is not None:
                stages.append(StageResult(
                    stage=stage,
                    status="skipped",
                    diagnostics=[f"stage '{blocked}' did not succeed"],
                ))
                continue
            logger.info("\n" + "=" * 70)
            logger.info(f"STAGE {step}: {stage.upper()}")
            logger.info("=" * 70)
            result = self.agents[stage].run(ctx)
            stages.append(result)
            if not result.ok:
                blocked = stage

        report = Report(
            command=command,
            name=session.name,
            config={**session.model_dump(), "weights": session.weight_vector().to_strings()},
            seed=session.seed,
            stages=stages,
            exit_code=exit_code_for(stages),
        )

        if settings.SAVE_REPORTS:
            FileHandler.save_report(report.to_json(), session.name, command)
        if self.structured_logger is not None:
            self.structured_logger.log_run(f"{session.name}_{command}", report.model_dump())

        marker = "✓" if report.exit_code == 0 else "✗"
        logger.info("\n" + "=" * 70)
        logger.info(f"{marker} {command.upper()} COMPLETE (exit status {report.exit_code})")
        logger.info("=" * 70 + "\n")
        return report
