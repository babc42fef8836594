"""
Properties Package
Exact and sampled testers for the eight quasi-random properties of a Boolean
function at a given rank, with witnesses and the implication chain between them
"""

from .property_report import PROPERTY_TAGS, PropertyReport, mean_zero_ok, validate_rank
from .property_inf import inf_error, worst_shift
from .property_sd import sd_error, subcube_scan_cost
from .property_rf import rf_error
from .property_rc import rc_error, rc_error_direct
from .property_ri import averaged_restriction_influence, ri_error, ri_error_direct
from .property_lsr import lsr_error, lsr_validate_codegree
from .property_dth import dth_deviation, dth_target, within_standard_errors
from .property_rain import k2_rain_deviation, rain_deviation
from .full_report import (
    ChainCheck,
    chain_table,
    check_chain,
    dth_battery,
    evaluate_witness,
    full_report,
    rain_battery,
)

__all__ = [
    'PROPERTY_TAGS',
    'PropertyReport',
    'mean_zero_ok',
    'validate_rank',
    'inf_error',
    'worst_shift',
    'sd_error',
    'subcube_scan_cost',
    'rf_error',
    'rc_error',
    'rc_error_direct',
    'averaged_restriction_influence',
    'ri_error',
    'ri_error_direct',
    'lsr_error',
    'lsr_validate_codegree',
    'dth_deviation',
    'dth_target',
    'within_standard_errors',
    'k2_rain_deviation',
    'rain_deviation',
    'ChainCheck',
    'chain_table',
    'check_chain',
    'dth_battery',
    'evaluate_witness',
    'full_report',
    'rain_battery',
]
