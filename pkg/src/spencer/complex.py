"""
The logarithmic Spencer complex of an adapted basis and its dual.

Level l maps D (x) wedge^l to D (x) wedge^(l-1). Row convention:
phi_l(e_I) = sum_J P_{I,J} e_J, where for I = (i_1 < ... < i_l)

    phi_l(e_I) = sum_p (-1)^(p-1) delta~_{i_p} e_{I - i_p}
               + sum_{p<q} (-1)^(p+q) [delta~_{i_p}, delta~_{i_q}] ^ e_{I - i_p - i_q}

with delta~_1 = chi + k and delta~_i = delta_i otherwise. Brackets are
expanded as [chi + k, delta_j] = nu_j delta_j and through the bracket table;
their polynomial coefficients become multiplication operators.

The dual acts on polynomial tuples by (phi*_l u)_I = sum_J P_{I,J}(u_J).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

import numpy as np

from src.algebra.errors import InconsistencyError, InputError
from src.algebra.polynomial import Polynomial
from src.algebra.sampling import random_polynomial
from src.logarithmic.adapted_basis import AdaptedBasis
from src.spencer.wedge import WedgeIndex, format_wedge, insert_sorted, wedge_basis
from src.weyl.operator import DifferentialOperator, op_apply, op_multiply

logger = logging.getLogger(__name__)

OperatorMatrix = Dict[Tuple[WedgeIndex, WedgeIndex], DifferentialOperator]


@dataclass(frozen=True)
class CochainTuple:
    """A polynomial per wedge label of size `level`; missing labels are zero."""

    level: int
    gens: Tuple[str, ...]
    components: Mapping[WedgeIndex, Polynomial]

    @classmethod
    def zero(cls, gens, n: int, level: int) -> "CochainTuple":
        return cls(level, tuple(gens), {I: Polynomial.zero(gens) for I in wedge_basis(n, level)})

    def __getitem__(self, index: WedgeIndex) -> Polynomial:
        return self.components.get(index, Polynomial.zero(self.gens))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components.values())

    def __sub__(self, other: "CochainTuple") -> "CochainTuple":
        if self.level != other.level:
            raise InputError(f"cochains at levels {self.level} and {other.level}")
        keys = sorted(set(self.components) | set(other.components))
        return CochainTuple(self.level, self.gens, {I: self[I] - other[I] for I in keys})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CochainTuple):
            return NotImplemented
        return self.level == other.level and (self - other).is_zero()

    def to_strings(self) -> Dict[str, str]:
        return {format_wedge(I): self.components[I].to_string() for I in sorted(self.components)}


@dataclass(frozen=True)
class SpencerComplex:
    """Operator matrices phi_1..phi_n of the twisted complex, delta~_1 = chi + k."""

    basis: AdaptedBasis
    k: int
    levels: Dict[int, OperatorMatrix]

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def gens(self) -> Tuple[str, ...]:
        return self.basis.gens

    def sources(self, level: int) -> List[WedgeIndex]:
        return wedge_basis(self.n, level)

    def targets(self, level: int) -> List[WedgeIndex]:
        return wedge_basis(self.n, level - 1)

    def entry(self, level: int, source: WedgeIndex, target: WedgeIndex) -> DifferentialOperator:
        return self.levels[level].get((source, target), DifferentialOperator.zero(self.gens))

    def blocks(self, level: int) -> Tuple[List[WedgeIndex], List[WedgeIndex]]:
        """(R, S): source labels containing 1 and those that do not."""
        labels = self.sources(level)
        return [I for I in labels if 1 in I], [I for I in labels if 1 not in I]

    def diagonal_constants(self, level: int) -> Dict[WedgeIndex, Fraction]:
        """c_I = k - sum_{j in I - {1}} nu_j for I in R; X_l has entries chi + c_I."""
        R, _ = self.blocks(level)
        return {
            I: self.k - sum((self.basis.nu(j) for j in I[1:]), Fraction(0))
            for I in R
        }

    def nonzero_entries(self, level: int) -> int:
        return len(self.levels[level])


def _tilde(b: AdaptedBasis, k: int, i: int) -> DifferentialOperator:
    if i == 1:
        return b.chi.as_operator() + k
    return b.delta(i).as_operator()


def _bracket_coefficients(b: AdaptedBasis, i: int, j: int) -> Dict[int, Polynomial]:
    """[delta~_i, delta~_j] = sum_l c_l delta~_l for i < j."""
    gens = b.gens
    if i == 1:
        return {j: Polynomial.constant(gens, b.nu(j))}
    coeffs = b.bracket(i, j)
    return {l: c for l, c in enumerate(coeffs, start=2) if not c.is_zero()}


def _add(matrix: OperatorMatrix, key, op: DifferentialOperator) -> None:
    if key in matrix:
        op = matrix[key] + op
    if op.is_zero():
        matrix.pop(key, None)
    else:
        matrix[key] = op


def _level_matrix(b: AdaptedBasis, level: int, tildes: Dict[int, DifferentialOperator]) -> OperatorMatrix:
    matrix: OperatorMatrix = {}
    for I in wedge_basis(b.n, level):
        for p, i in enumerate(I):
            target = I[:p] + I[p + 1:]
            op = tildes[i] if p % 2 == 0 else -tildes[i]
            _add(matrix, (I, target), op)
        for p in range(level):
            for q in range(p + 1, level):
                rest = tuple(x for x in I if x not in (I[p], I[q]))
                sign = -1 if (p + q) % 2 else 1
                for l, c in _bracket_coefficients(b, I[p], I[q]).items():
                    s, target = insert_sorted(l, rest)
                    if not s:
                        continue
                    op = DifferentialOperator.from_polynomial(c.scale(sign * s))
                    _add(matrix, (I, target), op)
    return matrix


def spencer_matrices(b: AdaptedBasis, k: int) -> SpencerComplex:
    """
    Build phi_1..phi_n for the twist k.

    Raises:
        InputError: k < 0 or the basis carries no bracket table
    """
    if k < 0:
        raise InputError(f"k must be nonnegative, got {k}")
    if b.bracket_constants is None:
        raise InputError("adapted basis has no bracket table")
    tildes = {i: _tilde(b, k, i) for i in range(1, b.n + 1)}
    levels = {level: _level_matrix(b, level, tildes) for level in range(1, b.n + 1)}
    logger.debug(
        f"Spencer complex k={k}: "
        + ", ".join(f"phi_{lv} {len(m)} entries" for lv, m in levels.items())
    )
    return SpencerComplex(b, k, levels)


def compose(C: SpencerComplex, level: int) -> OperatorMatrix:
    """phi_{l-1} o phi_l as a matrix from wedge^l to wedge^(l-2): entries sum_J P_{I,J} Q_{J,K}."""
    upper = C.levels[level]
    lower = C.levels[level - 1]
    by_source: Dict[WedgeIndex, List[Tuple[WedgeIndex, DifferentialOperator]]] = {}
    for (J, K), Q in lower.items():
        by_source.setdefault(J, []).append((K, Q))
    result: OperatorMatrix = {}
    for (I, J), P in upper.items():
        for K, Q in by_source.get(J, []):
            _add(result, (I, K), op_multiply(P, Q))
    return result


def level_is_complex(C: SpencerComplex, level: int) -> bool:
    ok = not compose(C, level)
    if not ok:
        logger.debug(f"phi_{level - 1} o phi_{level} != 0 for k={C.k}")
    return ok


def verify_complex(C: SpencerComplex, max_workers: int = 1) -> bool:
    """True iff phi_{l-1} o phi_l = 0 for every l = 2..n."""
    levels = list(range(2, C.n + 1))
    if max_workers > 1 and len(levels) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(lambda lv: level_is_complex(C, lv), levels))
    else:
        results = [level_is_complex(C, lv) for lv in levels]
    return all(results)


def _check_level(C: SpencerComplex, level: int) -> None:
    if not 1 <= level <= C.n:
        raise InputError(f"level must be in 1..{C.n}, got {level}")


def dual_apply(C: SpencerComplex, level: int, u: CochainTuple) -> CochainTuple:
    """
    phi*_l on a cochain of level l-1; returns a cochain of level l.

    Raises:
        InputError: level out of range, or u at the wrong level
    """
    _check_level(C, level)
    if u.level != level - 1:
        raise InputError(f"phi*_{level} needs a cochain of level {level - 1}, got level {u.level}")
    gens = C.gens
    out = {I: Polynomial.zero(gens) for I in C.sources(level)}
    for (I, J), P in C.levels[level].items():
        uj = u[J]
        if not uj.is_zero():
            out[I] = out[I] + op_apply(P, uj)
    return CochainTuple(level, gens, out)


def random_cochain(
    C: SpencerComplex,
    level: int,
    rng: np.random.Generator,
    degree: int,
    terms: int = 4,
) -> CochainTuple:
    gens = C.gens
    return CochainTuple(level, gens, {
        I: random_polynomial(rng, gens, degree, terms) for I in wedge_basis(C.n, level)
    })


def random_coboundary(
    C: SpencerComplex,
    level: int,
    rng: np.random.Generator,
    degree: int,
    terms: int = 4,
) -> Tuple[CochainTuple, CochainTuple]:
    """(v, phi*_l v) for a random cochain v of level l-1."""
    v = random_cochain(C, level - 1, rng, degree, terms)
    return v, dual_apply(C, level, v)


def diagonal_constants(C: SpencerComplex, level: int) -> Dict[WedgeIndex, Fraction]:
    """
    Constants of X_l, checked positive when k >= 1.

    Raises:
        InconsistencyError: some constant is not positive although k >= 1
    """
    _check_level(C, level)
    constants = C.diagonal_constants(level)
    if C.k >= 1:
        bad = {I: c for I, c in constants.items() if c <= 0}
        if bad:
            raise InconsistencyError(
                f"nonpositive diagonal constants at level {level}",
                ", ".join(f"{format_wedge(I)}: {c}" for I, c in bad.items()),
            )
    return constants


def operator_row(C: SpencerComplex, level: int, source: WedgeIndex) -> Dict[str, str]:
    """Rendered row of phi_l for one source label, in target order."""
    return {
        format_wedge(J): C.entry(level, source, J).to_string()
        for J in C.targets(level)
    }
