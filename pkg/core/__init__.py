"""
Core Package
Exact representation of Boolean functions on F_2^n and their Fourier,
autocorrelation and influence analysis
"""

from .boolean_function import BooleanFunction, xor_function
from .errors import (
    QuasiRandomError,
    PreconditionError,
    InputFormatError,
    BudgetExceededError,
    VerificationError,
    check_budget,
)
from .spectrum import (
    Spectrum,
    AutocorrelationTable,
    fwht,
    walsh_transform,
    autocorrelation,
    autocorrelation_direct,
    convolve,
    fourier_coefficient,
    influence,
    spectral_mass,
    subcube_masses,
    restricted_fourier_identity,
    restricted_coefficient_direct,
    restricted_mean_square,
    degree_weight_profile,
)
from .subcube import Subcube, restrict, restriction_tables, subcubes_of_codimension, subcubes_with_fixed

__all__ = [
    'BooleanFunction',
    'xor_function',
    'QuasiRandomError',
    'PreconditionError',
    'InputFormatError',
    'BudgetExceededError',
    'VerificationError',
    'check_budget',
    'Spectrum',
    'AutocorrelationTable',
    'fwht',
    'walsh_transform',
    'autocorrelation',
    'autocorrelation_direct',
    'convolve',
    'fourier_coefficient',
    'influence',
    'spectral_mass',
    'subcube_masses',
    'restricted_fourier_identity',
    'restricted_coefficient_direct',
    'restricted_mean_square',
    'degree_weight_profile',
    'Subcube',
    'restrict',
    'restriction_tables',
    'subcubes_of_codimension',
    'subcubes_with_fixed',
]
