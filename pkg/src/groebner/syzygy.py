"""
Syzygies and lifts via tagged modules.

Each generator v_j of a submodule of O^m is paired with a tag e_j in a
second block O^r. A Groebner basis of the tagged module under a block
elimination order (original block above the tag block) records how every
basis element is built from the v_j: elements with a zero original block
are syzygies, and reducing (t, 0) to a remainder (0, -c) exhibits
t = sum c_j v_j.
"""

import logging
from typing import List, Optional, Sequence

from sympy import QQ

from src.algebra.errors import DimensionMismatchError, InconsistencyError, InputError
from src.algebra.polynomial import Polynomial, to_fraction
from src.groebner.buchberger import _Entry, groebner_entries, reduce_terms
from src.groebner.module import ModuleElement, TermDict, combine
from src.groebner.orders import DEGREVLEX, MonomialOrder

logger = logging.getLogger(__name__)


def _tagged_vectors(gens: Sequence[ModuleElement]) -> List[TermDict]:
    m = gens[0].rank
    vectors = []
    for j, g in enumerate(gens):
        terms = g.to_terms()
        terms[(m + j, (0,) * len(g.gens))] = 1
        vectors.append(terms)
    return vectors


def _split(terms: TermDict, m: int):
    top = {t: c for t, c in terms.items() if t[0] < m}
    tags = {(t[0] - m, t[1]): c for t, c in terms.items() if t[0] >= m}
    return top, tags


class ModuleLifter:
    """Tagged Groebner basis of a fixed generator list, reusable for many lifts."""

    def __init__(self, gens: Sequence[ModuleElement], order: MonomialOrder = DEGREVLEX):
        if not gens:
            raise InputError("lift needs at least one generator")
        rank = gens[0].rank
        for g in gens:
            if g.rank != rank:
                raise DimensionMismatchError(f"generator ranks differ: {g.rank} vs {rank}")
        self.gens = list(gens)
        self.rank = rank
        self.var_gens = gens[0].gens
        self.order = order.with_module("elim", split=rank)
        self.entries: List[_Entry] = groebner_entries(
            _tagged_vectors(self.gens), self.order, rank_one=False
        )
        logger.debug(f"Tagged basis: {len(self.entries)} elements for {len(self.gens)} generators")

    def syzygy_terms(self) -> List[TermDict]:
        """Tag parts of the basis elements whose original block vanishes."""
        out = []
        for e in self.entries:
            top, tags = _split(e.terms, self.rank)
            if not top:
                out.append(tags)
        return out

    def lift(self, target: ModuleElement) -> Optional[List[Polynomial]]:
        if target.rank != self.rank:
            raise DimensionMismatchError(f"target rank {target.rank} vs generator rank {self.rank}")
        remainder = reduce_terms(target.to_terms(), self.entries, self.order)
        top, tags = _split(remainder, self.rank)
        if top:
            return None
        coeffs = ModuleElement.from_terms(self.var_gens, len(self.gens), tags)
        result = [-c for c in coeffs]
        if combine(result, self.gens) != target:
            raise InconsistencyError("lift coefficients do not re-expand to the target")
        return result


def syzygy_basis(g: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> List[ModuleElement]:
    """
    Generators of {(a_1..a_m) : sum a_i g_i = 0}.

    Each generator is scaled to integer coefficients with content 1 in its
    leading component; the list is a Groebner basis of the syzygy module.
    """
    if not g:
        raise InputError("syzygy_basis needs a nonempty list")
    if all(p.is_zero() for p in g):
        raise InputError("all polynomials are zero")
    lifter = ModuleLifter([ModuleElement.of(p) for p in g], order)
    syzygies = []
    for tags in lifter.syzygy_terms():
        element = ModuleElement.from_terms(g[0].gens, len(g), tags)
        element = primitive_element(element)
        relation = sum((a * p for a, p in zip(element, g)), Polynomial.zero(g[0].gens))
        if not relation.is_zero():
            raise InconsistencyError("syzygy does not satisfy its relation", str(element))
        syzygies.append(element)
    logger.debug(f"Syzygy module of {len(g)} polynomials: {len(syzygies)} generators")
    return syzygies


def primitive_element(element: ModuleElement) -> ModuleElement:
    """Scale so all coefficients are integers with gcd 1, first nonzero component positive."""
    content = QQ.zero
    for comp in element:
        content = QQ.gcd(content, comp.element.content())
    if not content:
        return element
    factor = 1 / to_fraction(content)
    first = next(comp for comp in element if not comp.is_zero())
    if first.leading_term()[1] < 0:
        factor = -factor
    return ModuleElement(tuple(comp.scale(factor) for comp in element))


def lift(
    target: ModuleElement,
    gens: Sequence[ModuleElement],
    order: MonomialOrder = DEGREVLEX,
) -> Optional[List[Polynomial]]:
    """
    Coefficients c_j with target = sum c_j gens_j, or None if target is not in the submodule.
    """
    return ModuleLifter(gens, order).lift(target)
