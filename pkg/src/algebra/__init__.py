"""Exact rational polynomials and the weight grading."""

from src.algebra.polynomial import Polynomial, format_rational
from src.algebra.weights import (
    INFINITY,
    WQHCheck,
    WeightVector,
    in_filtration,
    is_wqh,
    normalize_weight,
    w_order,
    weight_rank,
    wqh_decompose,
)

__all__ = [
    'Polynomial',
    'format_rational',
    'INFINITY',
    'WQHCheck',
    'WeightVector',
    'in_filtration',
    'is_wqh',
    'normalize_weight',
    'w_order',
    'weight_rank',
    'wqh_decompose',
]
