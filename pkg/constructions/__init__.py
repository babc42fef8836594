"""
Constructions Package
Bent functions, binary linear codes and their composition into functions that
are exactly balanced up to a chosen rank
"""

from .bent import BentCertificate, inner_product, is_bent
from .linear_code import (
    EXAMPLE_EXTENDED_HAMMING_ROWS,
    LinearCode,
    example_extended_hamming,
    extended_hamming,
    generator_basis,
    hamming_parity_check,
    identity_code,
    min_kernel_weight,
    nullspace_basis,
    rref_bitrows,
    weight_distribution,
)
from .tower import (
    TowerVerdict,
    autocorrelation_pushforward,
    builtin_tower_battery,
    compose,
    kernel_indicator_check,
    verify_tower,
)

__all__ = [
    'BentCertificate',
    'inner_product',
    'is_bent',
    'EXAMPLE_EXTENDED_HAMMING_ROWS',
    'LinearCode',
    'example_extended_hamming',
    'extended_hamming',
    'generator_basis',
    'hamming_parity_check',
    'identity_code',
    'min_kernel_weight',
    'nullspace_basis',
    'rref_bitrows',
    'weight_distribution',
    'TowerVerdict',
    'autocorrelation_pushforward',
    'builtin_tower_battery',
    'compose',
    'kernel_indicator_check',
    'verify_tower',
]
