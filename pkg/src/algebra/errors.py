"""
Exception hierarchy for the toolkit.

Input errors (exit status 2) are problems with what the user supplied.
Mathematical errors (exit status 1) are facts about the divisor or an
internal inconsistency detected by one of the exact checks.
"""

from fractions import Fraction
from typing import Optional


class ToolkitError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 2


class InputError(ToolkitError):
    """Malformed or inconsistent input."""

    exit_code = 2


class DimensionMismatchError(InputError):
    """Objects over different variable sets (or ranks) were combined."""


class ConfigError(InputError):
    """Invalid session configuration."""


class PolynomialSyntaxError(InputError):
    """Polynomial text that does not match the grammar."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at byte offset {offset}")


class MathematicalError(ToolkitError):
    """A mathematical precondition failed or a check found a contradiction."""

    exit_code = 1


class NotWQHError(MathematicalError):
    """Polynomial is not weakly quasi-homogeneous (of the required weight)."""


class ResonanceError(MathematicalError):
    """(chi + c) is not invertible on a weight that occurs: c + nu = 0."""

    def __init__(self, c: Fraction, weight: Fraction):
        self.c = c
        self.weight = weight
        super().__init__(
            f"resonance: c + nu = 0 for c = {c} at weight nu = {weight}"
        )


class FreenessNotCertifiedError(MathematicalError):
    """No subset of WQH generators passed Saito's criterion."""


class InconsistencyError(MathematicalError):
    """An identity that must hold exactly did not."""

    def __init__(self, message: str, detail: Optional[str] = None):
        self.detail = detail
        super().__init__(message if detail is None else f"{message}: {detail}")


class WitnessRefusedError(MathematicalError):
    """Ext witnesses need the positive shift k >= 1."""
