"""
Monomial orders on polynomials and their extensions to free modules O^m.
"""

from dataclasses import dataclass
from typing import Literal, Optional, Tuple

from sympy.polys.orderings import grevlex, lex

from src.algebra.errors import InputError
from src.algebra.polynomial import Exponent
from src.algebra.weights import WeightVector

OrderKind = Literal["degrevlex", "lex", "weighted"]
ModuleExtension = Literal["top", "pot", "elim"]


@dataclass(frozen=True)
class MonomialOrder:
    """
    A term order. Keys compare with Python tuple ordering: larger key = larger term.

    kind:
        degrevlex, lex, or weighted (alpha.w first, degrevlex tie-break)
    module:
        top  - term over position, lower position wins ties
        pot  - position over term, lower position is larger
        elim - positions < split form a block above all others; term over
               position inside each block
    """

    kind: OrderKind = "degrevlex"
    weights: Optional[WeightVector] = None
    module: ModuleExtension = "top"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "weighted"):
            raise InputError(f"unknown monomial order: {self.kind}")
        if self.kind == "weighted" and self.weights is None:
            raise InputError("weighted order needs a weight vector")
        if self.module not in ("top", "pot", "elim"):
            raise InputError(f"unknown module extension: {self.module}")

    def monomial_key(self, exps: Exponent) -> Tuple:
        if self.kind == "degrevlex":
            return grevlex(exps)
        if self.kind == "lex":
            return lex(exps)
        return (self.weights.dot(exps), grevlex(exps))

    def term_key(self, pos: int, exps: Exponent) -> Tuple:
        mk = self.monomial_key(exps)
        if self.module == "top":
            return (mk, -pos)
        if self.module == "pot":
            return (-pos, mk)
        return (1 if pos < self.split else 0, mk, -pos)

    def with_module(self, module: ModuleExtension, split: int = 0) -> "MonomialOrder":
        return MonomialOrder(self.kind, self.weights, module, split)


DEGREVLEX = MonomialOrder()


def order_from_name(name: str, weights: Optional[WeightVector] = None) -> MonomialOrder:
    """Build an order from a settings string."""
    return MonomialOrder(kind=name.lower(), weights=weights)
