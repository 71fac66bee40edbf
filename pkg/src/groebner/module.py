"""
Elements of free modules O^m over the polynomial ring.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.algebra.errors import DimensionMismatchError, InputError
from src.algebra.polynomial import Exponent, Polynomial

Term = Tuple[int, Exponent]
TermDict = Dict[Term, Fraction]


@dataclass(frozen=True)
class ModuleElement:
    """A fixed-length tuple of polynomials, an element of O^m."""

    components: Tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise InputError("module elements need at least one component")
        gens = comps[0].gens
        for c in comps[1:]:
            if c.gens != gens:
                raise DimensionMismatchError("components over different variables")

    @classmethod
    def of(cls, *polys: Polynomial) -> "ModuleElement":
        return cls(tuple(polys))

    @classmethod
    def zero(cls, gens: Sequence[str], rank: int) -> "ModuleElement":
        return cls(tuple(Polynomial.zero(gens) for _ in range(rank)))

    @classmethod
    def from_terms(cls, gens: Sequence[str], rank: int, terms: TermDict) -> "ModuleElement":
        buckets: List[Dict[Exponent, Fraction]] = [{} for _ in range(rank)]
        for (pos, exps), c in terms.items():
            buckets[pos][exps] = c
        return cls(tuple(Polynomial(gens, b) for b in buckets))

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def gens(self) -> Tuple[str, ...]:
        return self.components[0].gens

    def __getitem__(self, i: int) -> Polynomial:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def _check(self, other: "ModuleElement") -> None:
        if self.rank != other.rank:
            raise DimensionMismatchError(f"ranks {self.rank} and {other.rank} differ")

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._check(other)
        return ModuleElement(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        self._check(other)
        return ModuleElement(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(tuple(-a for a in self))

    def times(self, p: Polynomial) -> "ModuleElement":
        """Multiply every component by the polynomial p."""
        return ModuleElement(tuple(p * a for a in self))

    def to_terms(self, offset: int = 0) -> TermDict:
        terms: TermDict = {}
        for pos, comp in enumerate(self.components):
            for exps, c in comp.terms.items():
                terms[(pos + offset, exps)] = c
        return terms

    def to_strings(self) -> List[str]:
        return [c.to_string() for c in self.components]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_strings()) + ")"


def combine(coeffs: Sequence[Polynomial], elements: Sequence[ModuleElement]) -> ModuleElement:
    """The linear combination sum_j coeffs[j] * elements[j]."""
    if len(coeffs) != len(elements):
        raise DimensionMismatchError("coefficient and element counts differ")
    if not elements:
        raise InputError("empty combination")
    total = ModuleElement.zero(elements[0].gens, elements[0].rank)
    for c, e in zip(coeffs, elements):
        if not c.is_zero():
            total = total + e.times(c)
    return total
