"""Orchestrator package."""
