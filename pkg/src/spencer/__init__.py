"""Logarithmic Spencer complexes, the Euler solver and Ext witnesses."""

from src.spencer.complex import (
    CochainTuple,
    SpencerComplex,
    diagonal_constants,
    dual_apply,
    random_coboundary,
    random_cochain,
    spencer_matrices,
    verify_complex,
)
from src.spencer.euler import euler_solve, euler_solve_diagonal
from src.spencer.oracle import SliceDimensions, graded_slice_oracle, monomials_of_weight, slice_weights
from src.spencer.wedge import WedgeIndex, format_wedge, parse_wedge, wedge_basis, wedge_index
from src.spencer.witness import WitnessResult, ext_witness

__all__ = [
    'CochainTuple',
    'SpencerComplex',
    'diagonal_constants',
    'dual_apply',
    'random_coboundary',
    'random_cochain',
    'spencer_matrices',
    'verify_complex',
    'euler_solve',
    'euler_solve_diagonal',
    'SliceDimensions',
    'graded_slice_oracle',
    'monomials_of_weight',
    'slice_weights',
    'WedgeIndex',
    'format_wedge',
    'parse_wedge',
    'wedge_basis',
    'wedge_index',
    'WitnessResult',
    'ext_witness',
]
