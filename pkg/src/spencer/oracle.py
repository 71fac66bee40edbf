"""
Finite-dimensional check of exactness on weight slices of the dual complex.

When every weight is positive, the polynomials of a fixed weight form a
finite-dimensional space. Give the component J of a level-m cochain the
shift s(J) = sum_{j in J} nu_j (nu_1 = 0); every phi*_l then maps the
slice {u_J of weight nu + s(J)} to the slice of the same nu one level up.
Ranks of the exact rational matrices are computed with sympy.
"""

import logging
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.algebra.errors import InconsistencyError, InputError
from src.algebra.polynomial import Exponent, Polynomial
from src.algebra.weights import WeightVector
from src.spencer.complex import CochainTuple, SpencerComplex, dual_apply
from src.spencer.wedge import WedgeIndex, wedge_basis

logger = logging.getLogger(__name__)

SliceBasis = List[Tuple[WedgeIndex, Exponent]]


class SliceDimensions(NamedTuple):
    """dim ker phi*_{l+1} and dim im phi*_l on one slice; exact when equal."""

    kernel: int
    image: int
    slice_dim: int

    @property
    def exact(self) -> bool:
        return self.kernel == self.image


def monomials_of_weight(w: WeightVector, mu: Fraction) -> List[Exponent]:
    """All exponents alpha with alpha.w = mu; needs every weight positive."""
    if w.rank != len(w):
        raise InputError("weight slices are finite only when every weight is positive")
    n = len(w)
    out: List[Exponent] = []

    def walk(i: int, remaining: Fraction, prefix: Tuple[int, ...]) -> None:
        if i == n - 1:
            e = remaining / w[i]
            if e.denominator == 1 and e >= 0:
                out.append(prefix + (int(e),))
            return
        e = 0
        while e * w[i] <= remaining:
            walk(i + 1, remaining - e * w[i], prefix + (e,))
            e += 1

    if mu >= 0:
        walk(0, Fraction(mu), ())
    return sorted(out)


def _shift(C: SpencerComplex, J: WedgeIndex) -> Fraction:
    return sum((C.basis.nu(j) for j in J), Fraction(0))


def slice_basis(C: SpencerComplex, level: int, nu: Fraction) -> SliceBasis:
    basis: SliceBasis = []
    for J in wedge_basis(C.n, level):
        for alpha in monomials_of_weight(C.basis.weight, nu + _shift(C, J)):
            basis.append((J, alpha))
    return basis


def _dual_matrix(C: SpencerComplex, level: int, nu: Fraction) -> Tuple[List[List[Fraction]], int, int]:
    """Matrix of phi*_level from the level-1 slice to the level slice (rows = target)."""
    source = slice_basis(C, level - 1, nu)
    target = slice_basis(C, level, nu)
    row_of: Dict[Tuple[WedgeIndex, Exponent], int] = {t: i for i, t in enumerate(target)}
    gens = C.gens
    rows = [[Fraction(0)] * len(source) for _ in target]
    for col, (J, alpha) in enumerate(source):
        u = CochainTuple(level - 1, gens, {J: Polynomial.monomial(gens, alpha)})
        image = dual_apply(C, level, u)
        for I, p in image.components.items():
            for beta, c in p.terms.items():
                key = (I, beta)
                if key not in row_of:
                    raise InconsistencyError(
                        f"phi*_{level} leaves the weight slice", f"{I}: {p}"
                    )
                rows[row_of[key]][col] = c
    return rows, len(target), len(source)


def _rank(rows: List[List[Fraction]], nrows: int, ncols: int) -> int:
    if nrows == 0 or ncols == 0:
        return 0
    entries = [[QQ(c.numerator, c.denominator) for c in row] for row in rows]
    return DomainMatrix(entries, (nrows, ncols), QQ).rank()


def graded_slice_oracle(C: SpencerComplex, level: int, nu: Fraction) -> SliceDimensions:
    """
    (dim ker phi*_{l+1}, dim im phi*_l) on the weight-nu slice at level l.

    phi*_0 and phi*_{n+1} are zero.

    Raises:
        InputError: some weight is zero, k < 1, or level outside 0..n
    """
    if C.basis.weight.rank != C.n:
        raise InputError("the slice oracle needs every weight positive (r(w) = n)")
    if C.k < 1:
        raise InputError("the slice oracle needs k >= 1")
    if not 0 <= level <= C.n:
        raise InputError(f"level must be in 0..{C.n}, got {level}")
    nu = Fraction(nu)
    dim = len(slice_basis(C, level, nu))

    if level >= 1:
        image = _rank(*_dual_matrix(C, level, nu))
    else:
        image = 0
    if level < C.n:
        kernel = dim - _rank(*_dual_matrix(C, level + 1, nu))
    else:
        kernel = dim
    logger.debug(f"slice level={level} nu={nu}: dim={dim}, ker={kernel}, im={image}")
    return SliceDimensions(kernel, image, dim)


def _attained_weights(w: WeightVector, bound: Fraction) -> List[Fraction]:
    found = set()

    def walk(i: int, total: Fraction) -> None:
        if i == len(w):
            found.add(total)
            return
        e = 0
        while total + e * w[i] <= bound:
            walk(i + 1, total + e * w[i])
            e += 1

    walk(0, Fraction(0))
    return sorted(found)


def slice_weights(C: SpencerComplex, max_weight: Fraction) -> List[Fraction]:
    """
    Every nu <= max_weight whose slice is nonempty at some level.

    Raises:
        InputError: some weight is zero
    """
    w = C.basis.weight
    if w.rank != C.n:
        raise InputError("weight slices are finite only when every weight is positive")
    max_weight = Fraction(max_weight)
    shifts = {
        _shift(C, J)
        for level in range(C.n + 1)
        for J in wedge_basis(C.n, level)
    }
    reachable = _attained_weights(w, max_weight + max(shifts))
    return sorted({mu - s for mu in reachable for s in shifts if mu - s <= max_weight})
