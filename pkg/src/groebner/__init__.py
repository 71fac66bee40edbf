"""Groebner bases, syzygies and lifts over the polynomial ring."""

from src.groebner.buchberger import GroebnerBasis, buchberger, normal_form
from src.groebner.module import ModuleElement, combine
from src.groebner.orders import DEGREVLEX, MonomialOrder, order_from_name
from src.groebner.syzygy import ModuleLifter, lift, primitive_element, syzygy_basis

__all__ = [
    'GroebnerBasis',
    'buchberger',
    'normal_form',
    'ModuleElement',
    'combine',
    'DEGREVLEX',
    'MonomialOrder',
    'order_from_name',
    'ModuleLifter',
    'lift',
    'primitive_element',
    'syzygy_basis',
]
