"""
Meromorphic fractions g / f^m with a fixed base f, and operator actions on them.
"""

import logging
from dataclasses import dataclass
from typing import Dict

from src.algebra.errors import DimensionMismatchError, InputError
from src.algebra.polynomial import Exponent, Polynomial, Scalar
from src.weyl.operator import DifferentialOperator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeroFraction:
    """numerator / base^exponent, always stored reduced."""

    numerator: Polynomial
    base: Polynomial
    exponent: int

    def __post_init__(self):
        if self.base.is_zero():
            raise ZeroDivisionError("a meromorphic fraction needs a nonzero base")
        if self.exponent < 0:
            raise InputError(f"negative exponent {self.exponent}")
        if self.numerator.gens != self.base.gens:
            raise DimensionMismatchError("numerator and base over different variables")

    @classmethod
    def reduced(cls, numerator: Polynomial, base: Polynomial, exponent: int) -> "MeroFraction":
        """Cancel powers of base from numerator until it no longer divides."""
        if numerator.is_zero():
            return cls(numerator, base, 0)
        while exponent > 0:
            q = numerator.exact_divide(base)
            if q is None:
                break
            numerator, exponent = q, exponent - 1
        return cls(numerator, base, exponent)

    @classmethod
    def inverse_power(cls, f: Polynomial, k: int) -> "MeroFraction":
        """1 / f^k."""
        return cls.reduced(Polynomial.one(f.gens), f, k)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def _check(self, other: "MeroFraction") -> None:
        if self.base != other.base:
            raise DimensionMismatchError("fractions over different bases")

    def __add__(self, other: "MeroFraction") -> "MeroFraction":
        self._check(other)
        m = max(self.exponent, other.exponent)
        num = (
            self.numerator * self.base ** (m - self.exponent)
            + other.numerator * other.base ** (m - other.exponent)
        )
        return MeroFraction.reduced(num, self.base, m)

    def __neg__(self) -> "MeroFraction":
        return MeroFraction(-self.numerator, self.base, self.exponent)

    def __sub__(self, other: "MeroFraction") -> "MeroFraction":
        return self + (-other)

    def times(self, p: Polynomial) -> "MeroFraction":
        return MeroFraction.reduced(p * self.numerator, self.base, self.exponent)

    def scale(self, c: Scalar) -> "MeroFraction":
        return MeroFraction.reduced(self.numerator.scale(c), self.base, self.exponent)

    def derivative(self, i: int) -> "MeroFraction":
        """d_i(g/f^m) = (f d_i g - m g d_i f) / f^(m+1)."""
        g, f, m = self.numerator, self.base, self.exponent
        if m == 0:
            return MeroFraction(g.derivative(i), f, 0)
        num = f * g.derivative(i) - g.scale(m) * f.derivative(i)
        return MeroFraction.reduced(num, f, m + 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MeroFraction):
            return NotImplemented
        return (
            self.base == other.base
            and self.exponent == other.exponent
            and self.numerator == other.numerator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.base, self.exponent))

    def to_string(self) -> str:
        if self.exponent == 0:
            return self.numerator.to_string()
        denom = f"({self.base.to_string()})"
        if self.exponent > 1:
            denom += f"^{self.exponent}"
        return f"({self.numerator.to_string()})/{denom}"

    def __str__(self) -> str:
        return self.to_string()


def apply_to_fraction(P: DifferentialOperator, u: MeroFraction) -> MeroFraction:
    """P(u), with the partial derivatives of u memoized by multidegree."""
    if P.gens != u.base.gens:
        raise DimensionMismatchError(f"operator over {P.gens}, fraction over {u.base.gens}")
    n = P.nvars
    memo: Dict[Exponent, MeroFraction] = {(0,) * n: u}

    def partials(beta: Exponent) -> MeroFraction:
        if beta in memo:
            return memo[beta]
        i = next(j for j, b in enumerate(beta) if b)
        lower = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
        memo[beta] = partials(lower).derivative(i)
        return memo[beta]

    total = MeroFraction(Polynomial.zero(u.base.gens), u.base, 0)
    for beta, p in P.sorted_terms()[::-1]:
        total = total + partials(beta).times(p)
    return total


def apply_to_inverse_power(P: DifferentialOperator, f: Polynomial, k: int) -> MeroFraction:
    """
    P(1/f^k) as a reduced fraction.

    Raises:
        ZeroDivisionError: f = 0
        InputError: k <= 0
    """
    if f.is_zero():
        raise ZeroDivisionError("1/f^k needs f != 0")
    if k <= 0:
        raise InputError(f"k must be a positive integer, got {k}")
    result = apply_to_fraction(P, MeroFraction.inverse_power(f, k))
    logger.debug(f"{P} applied to 1/f^{k}: {result}")
    return result
