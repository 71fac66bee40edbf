"""
Buchberger's algorithm for submodules of O^m.

Vectors are handled internally as dicts (position, exponent) -> Fraction.
Pair selection is the normal strategy (smallest lcm first, then pair
index), so the reduced basis is deterministic for a fixed input and order.
Redundant pairs are dropped with the Gebauer-Moeller chain criteria; the
coprime-leading-terms criterion is applied only in rank one, where it is valid.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy.polys.monomials import monomial_divides, monomial_lcm, monomial_ldiv, monomial_mul

from src.algebra.errors import DimensionMismatchError, InputError
from src.algebra.polynomial import Polynomial
from src.groebner.module import ModuleElement, Term, TermDict
from src.groebner.orders import DEGREVLEX, MonomialOrder

logger = logging.getLogger(__name__)


class _Entry:
    __slots__ = ("terms", "lt", "lc")

    def __init__(self, terms: TermDict, order: MonomialOrder):
        self.terms = terms
        self.lt, self.lc = leading(terms, order)


def leading(terms: TermDict, order: MonomialOrder) -> Tuple[Term, Fraction]:
    t = max(terms, key=lambda k: order.term_key(*k))
    return t, terms[t]


def _monic(terms: TermDict, order: MonomialOrder) -> TermDict:
    _, lc = leading(terms, order)
    if lc == 1:
        return terms
    return {t: c / lc for t, c in terms.items()}


def _subtract_multiple(p: TermDict, g: TermDict, shift, q: Fraction) -> None:
    """p -= q * x^shift * g, in place."""
    for (pos, exps), c in g.items():
        key = (pos, monomial_mul(exps, shift))
        v = p.get(key, 0) - q * c
        if v:
            p[key] = v
        else:
            p.pop(key, None)


def reduce_terms(
    vec: TermDict,
    basis: Sequence[_Entry],
    order: MonomialOrder,
    quotients: Optional[List[Dict]] = None,
) -> TermDict:
    """
    Full reduction of vec by basis; the first divisor in list order is used.

    If quotients is given, quotients[i] accumulates exponent -> coefficient
    for the multiplier of basis[i].
    """
    p = dict(vec)
    remainder: TermDict = {}
    while p:
        t, c = leading(p, order)
        pos, exps = t
        for idx, g in enumerate(basis):
            gpos, gexps = g.lt
            if gpos == pos and monomial_divides(gexps, exps):
                shift = monomial_ldiv(exps, gexps)
                q = c / g.lc
                _subtract_multiple(p, g.terms, shift, q)
                if quotients is not None:
                    s = quotients[idx].get(shift, 0) + q
                    if s:
                        quotients[idx][shift] = s
                    else:
                        quotients[idx].pop(shift, None)
                break
        else:
            remainder[t] = c
            del p[t]
    return remainder


def _s_vector(a: _Entry, b: _Entry) -> TermDict:
    lcm = monomial_lcm(a.lt[1], b.lt[1])
    s = {}
    _subtract_multiple(s, a.terms, monomial_ldiv(lcm, a.lt[1]), -1 / a.lc)
    _subtract_multiple(s, b.terms, monomial_ldiv(lcm, b.lt[1]), 1 / b.lc)
    return s


def _update(
    basis: List[_Entry],
    pairs: Dict[Tuple[int, int], tuple],
    entry: _Entry,
    order: MonomialOrder,
    rank_one: bool,
) -> None:
    """Append entry to basis and refresh the pair set (Gebauer-Moeller)."""
    h = len(basis)
    pos_h, lm_h = entry.lt

    # drop old pairs whose lcm is a proper multiple through the new element
    for (i, j), (pos, lcm_ij) in list(pairs.items()):
        if pos != pos_h or not monomial_divides(lm_h, lcm_ij):
            continue
        if lcm_ij == monomial_lcm(basis[i].lt[1], lm_h) or lcm_ij == monomial_lcm(basis[j].lt[1], lm_h):
            continue
        del pairs[(i, j)]

    classes: Dict[tuple, List[int]] = {}
    for i, g in enumerate(basis):
        if g.lt[0] == pos_h:
            classes.setdefault(monomial_lcm(g.lt[1], lm_h), []).append(i)

    kept = []
    for lcm in sorted(classes, key=order.monomial_key):
        if all(not monomial_divides(other, lcm) for other in kept):
            kept.append(lcm)
    for lcm in kept:
        members = classes[lcm]
        if rank_one and any(lcm == monomial_mul(basis[i].lt[1], lm_h) for i in members):
            continue
        pairs[(min(members), h)] = (pos_h, lcm)

    basis.append(entry)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis of a submodule, largest leading term first."""

    generators: Tuple[ModuleElement, ...]
    order: MonomialOrder

    @property
    def rank(self) -> int:
        return self.generators[0].rank if self.generators else 0

    def entries(self) -> List[_Entry]:
        return [_Entry(g.to_terms(), self.order) for g in self.generators]

    def is_groebner(self) -> bool:
        """Buchberger's criterion: every S-vector reduces to zero."""
        entries = self.entries()
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                if entries[i].lt[0] != entries[j].lt[0]:
                    continue
                if reduce_terms(_s_vector(entries[i], entries[j]), entries, self.order):
                    return False
        return True


def _check_uniform(gens: Sequence[ModuleElement]) -> int:
    if not gens:
        raise InputError("buchberger needs at least one generator")
    rank = gens[0].rank
    for g in gens:
        if g.rank != rank:
            raise DimensionMismatchError(f"generator ranks differ: {g.rank} vs {rank}")
        if g.gens != gens[0].gens:
            raise DimensionMismatchError("generators over different variables")
    return rank


def groebner_entries(
    vectors: Sequence[TermDict],
    order: MonomialOrder,
    rank_one: bool,
) -> List[_Entry]:
    """Core loop on term dicts; returns the reduced basis entries."""
    basis: List[_Entry] = []
    pairs: Dict[Tuple[int, int], tuple] = {}
    for vec in vectors:
        if vec:
            _update(basis, pairs, _Entry(_monic(vec, order), order), order, rank_one)

    steps = 0
    while pairs:
        (i, j), _ = min(pairs.items(), key=lambda kv: (order.term_key(*kv[1]), kv[0]))
        del pairs[(i, j)]
        r = reduce_terms(_s_vector(basis[i], basis[j]), basis, order)
        steps += 1
        if r:
            _update(basis, pairs, _Entry(_monic(r, order), order), order, rank_one)
    logger.debug(f"Buchberger: {steps} S-vectors reduced, {len(basis)} elements before reduction")

    # minimalize
    minimal: List[_Entry] = []
    for idx, g in enumerate(basis):
        redundant = False
        for jdx, other in enumerate(basis):
            if jdx == idx or other.lt[0] != g.lt[0]:
                continue
            if monomial_divides(other.lt[1], g.lt[1]):
                if other.lt[1] != g.lt[1] or jdx < idx:
                    redundant = True
                    break
        if not redundant:
            minimal.append(g)

    # interreduce
    reduced: List[_Entry] = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = dict(g.terms)
        del tail[g.lt]
        tail = reduce_terms(tail, others, order)
        tail[g.lt] = g.lc
        reduced.append(_Entry(_monic(tail, order), order))

    reduced.sort(key=lambda e: order.term_key(*e.lt), reverse=True)
    return reduced


def buchberger(gens: Sequence[ModuleElement], order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """
    Reduced Groebner basis of the submodule generated by gens.

    Args:
        gens: nonempty list of elements of O^m, all of the same rank
        order: monomial order with its module extension

    Returns:
        GroebnerBasis with monic generators, largest leading term first
    """
    rank = _check_uniform(gens)
    entries = groebner_entries([g.to_terms() for g in gens], order, rank == 1)
    var_gens = gens[0].gens
    generators = tuple(ModuleElement.from_terms(var_gens, rank, e.terms) for e in entries)
    return GroebnerBasis(generators, order)


def normal_form(e: ModuleElement, G: GroebnerBasis) -> Tuple[ModuleElement, List[Polynomial]]:
    """
    Divide e by the basis.

    Returns:
        (remainder, quotients) with e = sum quotients[i] * G.generators[i] + remainder
        and no remainder term divisible by a leading term of G
    """
    if G.generators and e.rank != G.rank:
        raise DimensionMismatchError(f"element rank {e.rank} vs basis rank {G.rank}")
    quotients: List[Dict] = [{} for _ in G.generators]
    remainder = reduce_terms(e.to_terms(), G.entries(), G.order, quotients)
    return (
        ModuleElement.from_terms(e.gens, e.rank, remainder),
        [Polynomial(e.gens, q) for q in quotients],
    )
