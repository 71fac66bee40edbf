"""
Report models for pipeline runs.

Every exact value is stored as a string: rationals as "p/q", polynomials
and operators in the input grammar (operators use Dx-style symbols). A
report therefore survives a JSON round trip unchanged, and identical
inputs give identical bytes.
"""

from typing import Any, Dict, List, Literal

from pydantic import BaseModel, Field

StageStatus = Literal["ok", "failed", "error", "skipped"]


class StageResult(BaseModel):
    """Outcome of one pipeline stage."""

    stage: str
    status: StageStatus
    data: Dict[str, Any] = Field(default_factory=dict)
    diagnostics: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "ok"


class Report(BaseModel):
    """A full run: the session echo, the seed and one result per stage."""

    command: str
    name: str
    config: Dict[str, Any]
    seed: int
    stages: List[StageResult] = Field(default_factory=list)
    exit_code: int = 0

    def stage(self, name: str) -> StageResult:
        for result in self.stages:
            if result.stage == name:
                return result
        raise KeyError(name)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.model_validate_json(text)

    def to_text(self) -> str:
        lines = [
            "=" * 70,
            f"{self.command.upper()}: {self.name}",
            "=" * 70,
            f"f = {self.config.get('f')}",
            f"vars = {', '.join(self.config.get('vars', []))}",
            f"weights = ({', '.join(self.config.get('weights', []))})",
            f"k = {self.config.get('k')}",
            f"seed = {self.seed}",
        ]
        for result in self.stages:
            marker = {"ok": "✓", "skipped": "-"}.get(result.status, "✗")
            lines.append("")
            lines.append(f"{marker} [{result.stage}] {result.status}")
            for key, value in result.data.items():
                lines.extend(_render_value(key, value, indent=2))
            for message in result.diagnostics:
                lines.append(f"  ! {message}")
        lines.append("")
        lines.append(f"exit status: {self.exit_code}")
        return "\n".join(lines) + "\n"


def _render_value(key: str, value: Any, indent: int) -> List[str]:
    pad = " " * indent
    if isinstance(value, dict):
        if not value:
            return [f"{pad}{key}: {{}}"]
        lines = [f"{pad}{key}:"]
        for k, v in value.items():
            lines.extend(_render_value(str(k), v, indent + 2))
        return lines
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        lines = [f"{pad}{key}:"]
        for i, v in enumerate(value):
            lines.extend(_render_value(f"[{i}]", v, indent + 2))
        return lines
    if isinstance(value, list):
        return [f"{pad}{key}: [{', '.join(str(v) for v in value)}]"]
    return [f"{pad}{key}: {value}"]
