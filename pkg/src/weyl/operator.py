"""
Differential operators with polynomial coefficients, kept in normal order.

An operator is a finite sum p_beta(x) d^beta with every x to the left of
every d. Products are normal-ordered with the generalized Leibniz rule

    d^beta o q = sum_{kappa <= beta} C(beta, kappa) (d^kappa q) d^(beta - kappa)
"""

from fractions import Fraction
from itertools import product
from math import comb
from typing import Dict, Iterator, Optional, Sequence, Tuple

from sympy.polys.orderings import grevlex

from src.algebra.errors import DimensionMismatchError
from src.algebra.polynomial import Exponent, Polynomial, Scalar

OperatorTerms = Dict[Exponent, Polynomial]


class DifferentialOperator:
    """Sum of p_beta(x) * d^beta; terms maps the d-multidegree beta to p_beta."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: Sequence[str], terms: Optional[OperatorTerms] = None):
        self.gens = tuple(gens)
        n = len(self.gens)
        clean: OperatorTerms = {}
        for beta, p in (terms or {}).items():
            beta = tuple(beta)
            if len(beta) != n:
                raise DimensionMismatchError(f"d-multidegree {beta} has length {len(beta)}, expected {n}")
            if p.gens != self.gens:
                raise DimensionMismatchError(f"coefficient over {p.gens}, operator over {self.gens}")
            if not p.is_zero():
                clean[beta] = p
        self.terms = clean

    @classmethod
    def zero(cls, gens: Sequence[str]) -> "DifferentialOperator":
        return cls(gens)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "DifferentialOperator":
        """Multiplication by p."""
        return cls(p.gens, {(0,) * p.nvars: p})

    @classmethod
    def from_constant(cls, gens: Sequence[str], c: Scalar) -> "DifferentialOperator":
        return cls.from_polynomial(Polynomial.constant(gens, c))

    @classmethod
    def partial(cls, gens: Sequence[str], i: int) -> "DifferentialOperator":
        beta = tuple(1 if j == i else 0 for j in range(len(gens)))
        return cls(gens, {beta: Polynomial.one(gens)})

    @property
    def nvars(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> int:
        """max |beta| over the terms; -1 for the zero operator."""
        if not self.terms:
            return -1
        return max(sum(beta) for beta in self.terms)

    def coefficient(self, beta: Exponent) -> Polynomial:
        return self.terms.get(tuple(beta), Polynomial.zero(self.gens))

    def __iter__(self) -> Iterator[Tuple[Exponent, Polynomial]]:
        return iter(self.terms.items())

    def _check(self, other: "DifferentialOperator") -> None:
        if self.gens != other.gens:
            raise DimensionMismatchError(f"operators over {self.gens} and {other.gens}")

    def _coerce(self, other) -> "DifferentialOperator":
        if isinstance(other, DifferentialOperator):
            self._check(other)
            return other
        if isinstance(other, Polynomial):
            return DifferentialOperator.from_polynomial(other)
        if isinstance(other, (int, Fraction)):
            return DifferentialOperator.from_constant(self.gens, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.gens, frozenset(self.terms.items())))

    def __add__(self, other) -> "DifferentialOperator":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        res = dict(self.terms)
        for beta, p in other.terms.items():
            res[beta] = res[beta] + p if beta in res else p
        return DifferentialOperator(self.gens, res)

    __radd__ = __add__

    def __neg__(self) -> "DifferentialOperator":
        return DifferentialOperator(self.gens, {b: -p for b, p in self.terms.items()})

    def __sub__(self, other) -> "DifferentialOperator":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "DifferentialOperator":
        return DifferentialOperator(self.gens, {b: p.scale(c) for b, p in self.terms.items()})

    def left_multiply(self, q: Polynomial) -> "DifferentialOperator":
        """q * self; polynomials on the left need no reordering."""
        return DifferentialOperator(self.gens, {b: q * p for b, p in self.terms.items()})

    def __mul__(self, other) -> "DifferentialOperator":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return op_multiply(self, other)

    def __rmul__(self, other) -> "DifferentialOperator":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return op_multiply(other, self)

    def apply(self, g: Polynomial) -> Polynomial:
        return op_apply(self, g)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grevlex(t[0]), reverse=True)

    def to_string(self) -> str:
        """Render with Dx-style symbols: "x^2*Dx^2 + x*Dx"."""
        if not self.terms:
            return "0"
        pieces = []
        for beta, p in self.sorted_terms():
            d = "*".join(
                f"D{name}" if e == 1 else f"D{name}^{e}"
                for name, e in zip(self.gens, beta) if e
            )
            if not d:
                body = p.to_string()
            elif p == 1:
                body = d
            elif p == -1:
                body = f"-{d}"
            elif len(p) == 1:
                body = f"{p.to_string()}*{d}"
            else:
                body = f"({p.to_string()})*{d}"
            if pieces and body.startswith("-"):
                pieces.append(f" - {body[1:]}")
            elif pieces:
                pieces.append(f" + {body}")
            else:
                pieces.append(body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"DifferentialOperator({self.to_string()!r}, gens={self.gens})"


def _below(beta: Exponent) -> Iterator[Exponent]:
    return product(*(range(b + 1) for b in beta))


def _multi_binomial(beta: Exponent, kappa: Exponent) -> int:
    c = 1
    for b, k in zip(beta, kappa):
        c *= comb(b, k)
    return c


def _partial_power(q: Polynomial, kappa: Exponent) -> Polynomial:
    for i, k in enumerate(kappa):
        for _ in range(k):
            q = q.derivative(i)
            if q.is_zero():
                return q
    return q


def op_multiply(P: DifferentialOperator, Q: DifferentialOperator) -> DifferentialOperator:
    """
    Normal-ordered product P*Q.

    Raises:
        DimensionMismatchError: operators over different variables
    """
    P._check(Q)
    gens = P.gens
    result: Dict[Exponent, Polynomial] = {}
    derivs: Dict[Tuple[Exponent, Exponent], Polynomial] = {}
    for beta, p in P.terms.items():
        for gamma, q in Q.terms.items():
            for kappa in _below(beta):
                key = (gamma, kappa)
                if key not in derivs:
                    derivs[key] = _partial_power(q, kappa)
                dq = derivs[key]
                if dq.is_zero():
                    continue
                c = _multi_binomial(beta, kappa)
                target = tuple(b - k + g for b, k, g in zip(beta, kappa, gamma))
                term = (p * dq).scale(c)
                result[target] = result[target] + term if target in result else term
    return DifferentialOperator(gens, result)


def op_apply(P: DifferentialOperator, g: Polynomial) -> Polynomial:
    """Action of P on the polynomial g."""
    if P.gens != g.gens:
        raise DimensionMismatchError(f"operator over {P.gens}, polynomial over {g.gens}")
    total = Polynomial.zero(g.gens)
    for beta, p in P.terms.items():
        dg = _partial_power(g, beta)
        if not dg.is_zero():
            total = total + p * dg
    return total


