"""
Structured Logger - one JSON file per run for debugging
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict

from config.settings import settings

logger = logging.getLogger(__name__)


class StructuredLogger:
    """Log structured run data for easy debugging."""

    def __init__(self):
        """Initialize structured logger."""
        self.log_dir = Path(settings.LOG_DIR)
        self.log_dir.mkdir(parents=True, exist_ok=True)

    def log_run(self, run_id: str, report: Dict[str, Any]) -> Path:
        """
        Log a complete pipeline run.

        The timestamp goes into the file name only; the report itself stays
        reproducible.

        Args:
            run_id: Run identifier (session name and command)
            report: Report as a JSON-compatible dict

        Returns:
            Path of the written log file
        """
        timestamp = datetime.now().strftime('%Y-%m-%d_%H-%M-%S')
        log_file = self.log_dir / f"{run_id}_{timestamp}.json"

        log_entry = {
            'run_id': run_id,
            'report': report,
        }

        with open(log_file, 'w', encoding='utf-8') as f:
            json.dump(log_entry, f, indent=2)

        logger.info(f"✓ Detailed log saved: {log_file}")
        return log_file
