"""
Session configuration: the divisor, its weights and the run parameters.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from config.settings import settings
from src.algebra.errors import ConfigError, InputError
from src.algebra.polynomial import Polynomial
from src.algebra.weights import WeightVector
from src.cli.polynomial_parser import IDENTIFIER_RE, parse_polynomial
from src.groebner.orders import MonomialOrder, order_from_name
from src.utils.file_handler import FileHandler

logger = logging.getLogger(__name__)


class SessionConfig(BaseModel):
    """One divisor and the parameters of a run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(default="session")
    vars: List[str]
    f: str
    weights: List[str]
    k: List[int] = Field(default_factory=lambda: list(settings.DEFAULT_K))
    degree_bound: int = Field(default_factory=lambda: settings.DEFAULT_DEGREE_BOUND)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    format: Literal["text", "json"] = Field(default_factory=lambda: settings.DEFAULT_FORMAT)
    samples: int = Field(default_factory=lambda: settings.RANDOM_SAMPLES)

    @field_validator("vars")
    @classmethod
    def _check_vars(cls, v: List[str]) -> List[str]:
        if not v:
            raise ValueError("vars must be nonempty")
        if len(set(v)) != len(v):
            raise ValueError(f"vars must be distinct: {v}")
        for name in v:
            if not IDENTIFIER_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        return v

    @field_validator("k")
    @classmethod
    def _check_k(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("k must list at least one value")
        if any(k < 0 for k in v):
            raise ValueError(f"k values must be nonnegative: {v}")
        return v

    @field_validator("degree_bound", "seed", "samples")
    @classmethod
    def _check_nonnegative(cls, v: int) -> int:
        if v < 0:
            raise ValueError(f"must be nonnegative, got {v}")
        return v

    @model_validator(mode="after")
    def _check_consistency(self) -> "SessionConfig":
        if len(self.weights) != len(self.vars):
            raise ValueError(
                f"weights has length {len(self.weights)} but there are {len(self.vars)} vars"
            )
        try:
            WeightVector.from_strings(self.weights)
            parse_polynomial(self.f, self.vars)
        except InputError as e:
            raise ValueError(str(e))
        return self

    def polynomial(self) -> Polynomial:
        return parse_polynomial(self.f, self.vars)

    def weight_vector(self) -> WeightVector:
        return WeightVector.from_strings(self.weights)

    def monomial_order(self) -> MonomialOrder:
        weights = self.weight_vector() if settings.MONOMIAL_ORDER == "weighted" else None
        return order_from_name(settings.MONOMIAL_ORDER, weights)


def build_session(
    config_path: Optional[str] = None,
    example: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> SessionConfig:
    """
    Merge a bundled example, a JSON config file and flag overrides, in that order.

    Raises:
        ConfigError: unknown example, unreadable file or invalid values
    """
    data: Dict[str, Any] = {}
    name = "session"
    if example:
        data.update(FileHandler.load_example(example))
        name = example
    if config_path:
        data.update(FileHandler.load_json(config_path))
        name = Path(config_path).stem
    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value
    data.setdefault("name", name)
    try:
        session = SessionConfig(**data)
    except ValidationError as e:
        raise ConfigError(f"invalid session config: {e}")
    logger.debug(f"Session {session.name}: f = {session.f}, w = {session.weights}, k = {session.k}")
    return session
