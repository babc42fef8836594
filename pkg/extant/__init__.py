"""
Extant Package
Comparators for Gowers uniformity, R-regularity, Z/2^n-regularity and stable
influences, and the relation checks linking them to balanced influences
"""

from .gowers import (
    GowersResult,
    f2_regular_error,
    gowers_cost,
    gowers_norm,
    gowers_power_sampled_definition,
)
from .regularity import (
    ZpCorrelation,
    binary_expansion_lift,
    geometric_decay_rate,
    r_regular_error,
    r_regular_profile,
    theorem_case_split,
    zp_correlations,
    zp_decay_table,
    zp_log_rank,
    zp_regularity_error,
)
from .stable_influence import max_stable_influence, stable_influence, stable_influence_profile
from .relations import (
    RelationCheck,
    lift_invariance,
    r_regularity_bound,
    relation_battery,
    stable_influence_bound,
)

__all__ = [
    'GowersResult',
    'f2_regular_error',
    'gowers_cost',
    'gowers_norm',
    'gowers_power_sampled_definition',
    'ZpCorrelation',
    'binary_expansion_lift',
    'geometric_decay_rate',
    'r_regular_error',
    'r_regular_profile',
    'theorem_case_split',
    'zp_correlations',
    'zp_decay_table',
    'zp_log_rank',
    'zp_regularity_error',
    'max_stable_influence',
    'stable_influence',
    'stable_influence_profile',
    'RelationCheck',
    'lift_invariance',
    'r_regularity_bound',
    'relation_battery',
    'stable_influence_bound',
]
