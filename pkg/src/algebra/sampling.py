"""
Seeded random polynomials for property checks.
"""

from itertools import combinations_with_replacement
from typing import List, Sequence

import numpy as np

from src.algebra.polynomial import Exponent, Polynomial


def _monomials_up_to(nvars: int, degree: int) -> List[Exponent]:
    monos = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            exps = [0] * nvars
            for i in combo:
                exps[i] += 1
            monos.append(tuple(exps))
    return monos


def random_polynomial(
    rng: np.random.Generator,
    gens: Sequence[str],
    degree: int,
    terms: int = 4,
    coeff_bound: int = 5,
) -> Polynomial:
    """
    Random polynomial of total degree <= degree with at most `terms` terms.

    Coefficients are nonzero integers in [-coeff_bound, coeff_bound].
    """
    monos = _monomials_up_to(len(gens), degree)
    count = min(terms, len(monos))
    picks = rng.choice(len(monos), size=count, replace=False)
    result = {}
    for idx in sorted(int(i) for i in picks):
        c = int(rng.integers(1, coeff_bound + 1))
        if rng.integers(0, 2):
            c = -c
        result[monos[idx]] = c
    return Polynomial(gens, result)
