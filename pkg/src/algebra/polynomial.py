"""
Sparse multivariate polynomials with exact rational coefficients.

A Polynomial wraps an element of sympy's sparse ring QQ[gens] in grevlex
order and pins it to a tuple of variable names. Coefficients leave the
wrapper as Fractions. Objects are immutable once built.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

from sympy import QQ, Symbol
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from src.algebra.errors import DimensionMismatchError

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def polynomial_ring(gens: Tuple[str, ...]) -> PolyRing:
    """QQ[gens] with grevlex as the ring order."""
    R, *_ = ring([Symbol(g) for g in gens], QQ, grevlex)
    return R


def to_qq(c: Scalar):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def format_rational(c: Fraction) -> str:
    """Render a rational as "p/q" (integers too, so parsing back is uniform)."""
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Sparse polynomial over Q in a fixed, named set of variables."""

    __slots__ = ("gens", "element", "_terms")

    def __init__(
        self,
        gens: Sequence[str],
        terms: Optional[Dict[Exponent, Scalar]] = None,
        element: Optional[PolyElement] = None,
    ):
        self.gens = tuple(gens)
        self._terms = None
        R = polynomial_ring(self.gens)
        if element is not None:
            self.element = element
            return
        n = len(self.gens)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise DimensionMismatchError(
                    f"monomial {exps} has {len(exps)} exponents, expected {n}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if c != 0:
                clean[exps] = to_qq(c)
        self.element = R.from_dict(clean) if clean else R.zero

    @property
    def ring(self) -> PolyRing:
        return polynomial_ring(self.gens)

    def _wrap(self, element: PolyElement) -> "Polynomial":
        return Polynomial(self.gens, element=element)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, gens: Sequence[str]) -> "Polynomial":
        gens = tuple(gens)
        return cls(gens, element=polynomial_ring(gens).zero)

    @classmethod
    def constant(cls, gens: Sequence[str], c: Scalar) -> "Polynomial":
        gens = tuple(gens)
        return cls(gens, element=polynomial_ring(gens).ground_new(to_qq(c)))

    @classmethod
    def one(cls, gens: Sequence[str]) -> "Polynomial":
        return cls.constant(gens, 1)

    @classmethod
    def variable(cls, gens: Sequence[str], which: Union[int, str]) -> "Polynomial":
        gens = tuple(gens)
        index = gens.index(which) if isinstance(which, str) else which
        return cls(gens, element=polynomial_ring(gens).gens[index])

    @classmethod
    def monomial(cls, gens: Sequence[str], exps: Exponent, coeff: Scalar = 1) -> "Polynomial":
        return cls(gens, {tuple(exps): coeff})

    # ------------------------------------------------------------------
    # basic queries
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        """Exponent -> nonzero Fraction coefficient."""
        if self._terms is None:
            self._terms = {m: to_fraction(c) for m, c in self.element.items()}
        return self._terms

    @property
    def nvars(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.element

    def __bool__(self) -> bool:
        return bool(self.element)

    def __len__(self) -> int:
        return len(self.element)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    def is_constant(self) -> bool:
        return self.element.is_ground

    def evaluate_at_zero(self) -> Fraction:
        """Value of the polynomial at the origin (its constant term)."""
        return self.coefficient(self.ring.zero_monom)

    def coefficient(self, exps: Exponent) -> Fraction:
        return to_fraction(self.element.get(tuple(exps), QQ.zero))

    def total_degree(self) -> int:
        if not self.element:
            return -1
        return max(sum(exps) for exps in self.element.itermonoms())

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        """Leading (exponent, coefficient) in grevlex."""
        return self.element.LM, to_fraction(self.element.LC)

    def _check_ring(self, other: "Polynomial") -> None:
        if self.gens is not other.gens and self.gens != other.gens:
            raise DimensionMismatchError(
                f"polynomials over {self.gens} and {other.gens} cannot be combined"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.gens, other)
        return NotImplemented

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.is_zero()
            return self.is_constant() and self.evaluate_at_zero() == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.gens == other.gens and self.element == other.element

    def __hash__(self) -> int:
        return hash((self.gens, self.element))

    def __neg__(self) -> "Polynomial":
        return self._wrap(-self.element)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.element + other.element)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.element - other.element)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.gens)
        return self._wrap(self.element.mul_ground(to_qq(c)))

    def mul_term(self, exps: Exponent, coeff: Scalar) -> "Polynomial":
        """Multiply by the single term coeff * x^exps."""
        if coeff == 0:
            return Polynomial.zero(self.gens)
        return self._wrap(self.element.mul_term((tuple(exps), to_qq(coeff))))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        return self._wrap(self.element * other.element)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        return self._wrap(self.element ** k)

    def derivative(self, i: int) -> "Polynomial":
        """Partial derivative with respect to the i-th variable."""
        return self._wrap(self.element.diff(self.ring.gens[i]))

    def gradient(self) -> Tuple["Polynomial", ...]:
        return tuple(self.derivative(i) for i in range(self.nvars))

    def exact_divide(self, q: "Polynomial") -> Optional["Polynomial"]:
        """
        Return h with self = q * h, or None if q does not divide self.

        Raises:
            ZeroDivisionError: if q is the zero polynomial
        """
        self._check_ring(q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        h, r = self.element.div(q.element)
        if r:
            return None
        return self._wrap(h)

    def primitive(self) -> "Polynomial":
        """Integer-coefficient multiple with content 1 and positive leading coefficient."""
        if not self.element:
            return self
        _, prim = self.element.primitive()
        if prim.LC < 0:
            prim = -prim
        return self._wrap(prim)

    # ------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------

    def sorted_terms(self) -> Iterable[Tuple[Exponent, Fraction]]:
        """Terms from largest to smallest in grevlex."""
        return [(m, to_fraction(c)) for m, c in self.element.terms()]

    def _monomial_text(self, exps: Exponent) -> str:
        factors = []
        for name, e in zip(self.gens, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def to_string(self) -> str:
        """Render in the input grammar: "x^3 - 1/2*x*y + 2"."""
        if not self.element:
            return "0"
        pieces = []
        for idx, (exps, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            mono = self._monomial_text(exps)
            if not mono:
                body = str(a.numerator) if a.denominator == 1 else format_rational(a)
            elif a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a.numerator}*{mono}"
            else:
                body = f"{format_rational(a)}*{mono}"
            if idx == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r}, gens={self.gens})"
