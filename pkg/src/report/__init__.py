"""Pipeline reports."""

from src.report.models import Report, StageResult, StageStatus

__all__ = ['Report', 'StageResult', 'StageStatus']
