"""Logarithmic derivations, Saito's criterion and adapted bases."""

from src.logarithmic.adapted_basis import (
    AdaptedBasis,
    adapted_basis,
    bracket_table,
    coefficient_weight_matrix,
    weight_inequalities,
)
from src.logarithmic.annihilators import (
    ann1_generators,
    ann1_generators_from_derivations,
    annihilation_check,
)
from src.logarithmic.derivations import (
    LogDerivationSet,
    log_derivations,
    split_log_derivation,
    theta_basis,
)
from src.logarithmic.saito import SaitoResult, determinant, saito_check

__all__ = [
    'AdaptedBasis',
    'adapted_basis',
    'bracket_table',
    'coefficient_weight_matrix',
    'weight_inequalities',
    'ann1_generators',
    'ann1_generators_from_derivations',
    'annihilation_check',
    'LogDerivationSet',
    'log_derivations',
    'split_log_derivation',
    'theta_basis',
    'SaitoResult',
    'determinant',
    'saito_check',
]
