"""
Main entry point for the WQH free divisor toolkit
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.settings import settings
from src.algebra.errors import ToolkitError
from src.cli.session import build_session
from src.orchestrator.pipeline_orchestrator import COMMANDS, PipelineOrchestrator
from src.utils.file_handler import FileHandler

logger = logging.getLogger(__name__)


def setup_logging() -> None:
    """Progress goes to stderr and the log file; stdout carries only the report."""
    Path(settings.LOG_DIR).mkdir(parents=True, exist_ok=True)
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper()),
        format='%(levelname)s:%(name)s:%(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr),
            logging.FileHandler(Path(settings.LOG_DIR) / settings.LOG_FILE, mode='w', encoding='utf-8')
        ],
        force=True
    )


def _split(value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    return [item.strip() for item in value.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    session_flags = argparse.ArgumentParser(add_help=False)
    session_flags.add_argument("--config", help="JSON session config")
    session_flags.add_argument("--example", help="bundled example name (see 'examples')")
    session_flags.add_argument("--vars", help="comma-separated variable names, e.g. x,y")
    session_flags.add_argument("--f", help="defining polynomial, e.g. 'x^3 - y^2'")
    session_flags.add_argument("--weights", help="comma-separated weights, e.g. 1/3,1/2")
    session_flags.add_argument("--k", help="comma-separated twists, e.g. 1,2,3")
    session_flags.add_argument("--degree-bound", type=int, help="degree of random test polynomials")
    session_flags.add_argument("--seed", type=int, help="seed for randomized checks")
    session_flags.add_argument("--samples", type=int, help="random samples per check")
    session_flags.add_argument("--format", choices=["text", "json"], help="report format")

    parser = argparse.ArgumentParser(
        prog="wqh-toolkit",
        description="Weight-graded analysis of weakly quasi-homogeneous free divisors",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        sub.add_parser(command, parents=[session_flags])
    sub.add_parser("examples", help="list the bundled example divisors")
    return parser


def session_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    k = _split(args.k)
    return {
        "vars": _split(args.vars),
        "f": args.f,
        "weights": _split(args.weights),
        "k": [int(x) for x in k] if k is not None else None,
        "degree_bound": args.degree_bound,
        "seed": args.seed,
        "samples": args.samples,
        "format": args.format,
    }


def list_examples() -> int:
    for entry in FileHandler.load_registry():
        print(f"{entry['name']:<20} {entry.get('category', ''):<16} {entry.get('description', '')}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """Main execution; returns the exit status."""
    setup_logging()
    args = build_parser().parse_args(argv)

    try:
        if args.command == "examples":
            return list_examples()
        overrides = session_overrides(args)
    except ValueError as e:
        logger.error(f"✗ Invalid flag value: {e}")
        return 2
    except ToolkitError as e:
        logger.error(f"✗ {e}")
        return e.exit_code

    try:
        session = build_session(args.config, args.example, overrides)
        report = PipelineOrchestrator().run(args.command, session)
    except ToolkitError as e:
        logger.error(f"✗ {e}")
        return e.exit_code

    if session.format == "json":
        sys.stdout.write(report.to_json() + "\n")
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Run interrupted by user")
        sys.exit(2)
    except Exception as e:
        logger.error(f"Fatal error: {e}", exc_info=True)
        sys.exit(2)
