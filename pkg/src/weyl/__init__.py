"""Vector fields, differential operators and their action on 1/f^k."""

from src.weyl.mero import MeroFraction, apply_to_fraction, apply_to_inverse_power
from src.weyl.operator import DifferentialOperator, op_apply, op_multiply
from src.weyl.vector_field import (
    VectorField,
    euler_field,
    vf_apply,
    vf_bracket,
    vf_is_wqh,
    vf_w_order,
    vf_wqh_parts,
)

__all__ = [
    'MeroFraction',
    'apply_to_fraction',
    'apply_to_inverse_power',
    'DifferentialOperator',
    'op_apply',
    'op_multiply',
    'VectorField',
    'euler_field',
    'vf_apply',
    'vf_bracket',
    'vf_is_wqh',
    'vf_w_order',
    'vf_wqh_parts',
]
