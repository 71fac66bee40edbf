"""
File handling utilities for session configs, the divisor registry and reports
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List

import yaml

from config.settings import settings
from src.algebra.errors import ConfigError

logger = logging.getLogger(__name__)


class FileHandler:
    """Handles file I/O for configs and reports."""

    @staticmethod
    def project_root() -> Path:
        return Path(__file__).parent.parent.parent

    @staticmethod
    def resolve(path: str) -> Path:
        """Relative paths are taken from the project root."""
        p = Path(path)
        return p if p.is_absolute() else FileHandler.project_root() / p

    @staticmethod
    def load_json(path: str) -> Dict[str, Any]:
        """
        Load a JSON session config.

        Args:
            path: Path to the JSON file

        Returns:
            dict: Parsed object
        """
        file_path = Path(path)
        if not file_path.exists():
            raise ConfigError(f"Config file not found: {path}")
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Invalid JSON in {path}: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"Config file {path} must hold a JSON object")
        logger.debug(f"Loaded config from {path}")
        return data

    @staticmethod
    def load_registry() -> List[Dict[str, Any]]:
        """Load the divisor registry from YAML."""
        registry_path = FileHandler.resolve(settings.DIVISOR_REGISTRY)
        if not registry_path.exists():
            raise ConfigError(f"Registry file not found at: {registry_path}")
        with open(registry_path, 'r', encoding='utf-8') as f:
            registry = yaml.safe_load(f)
        entries = registry.get('divisors', []) if isinstance(registry, dict) else []
        logger.debug(f"Loaded registry from {registry_path}: {len(entries)} divisors")
        return entries

    @staticmethod
    def load_example(name: str) -> Dict[str, Any]:
        """Config of a bundled example, by registry name."""
        for entry in FileHandler.load_registry():
            if entry['name'] == name:
                config_path = FileHandler.resolve(settings.DIVISOR_CONFIG_DIR) / entry['config_file']
                return FileHandler.load_json(str(config_path))
        known = [entry['name'] for entry in FileHandler.load_registry()]
        raise ConfigError(f"Unknown example {name!r}; known examples: {', '.join(known)}")

    @staticmethod
    def save_report(text: str, name: str, command: str) -> Path:
        """Write a rendered report to OUTPUT_DIR/<name>_<command>.json."""
        output_dir = Path(settings.OUTPUT_DIR)
        output_dir.mkdir(parents=True, exist_ok=True)
        output_path = output_dir / f"{name}_{command}.json"
        with open(output_path, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info(f"✓ Report saved: {output_path}")
        return output_path
