"""
Restriction Fourier (RF)
On average over restrictions to |S| <= d free coordinates, f is nearly bent
"""

from fractions import Fraction
from typing import Optional

from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET
from core.errors import check_budget

from .property_report import PropertyReport, validate_rank
from .property_sd import subcube_scan_cost, worst_subcube


def rf_error(f: BooleanFunction, d: int, budget: Optional[int] = DEFAULT_BUDGET) -> PropertyReport:
    """
    max over 1 <= |S| <= d and gamma on S of |E_z f|_{S,z}^(gamma)^2 - 2^(-|S|)|.

    E_z f|_{S,z}^(gamma)^2 is the spectral mass of the subcube that pins S to
    gamma, so the scan reuses the codimension-|S| subcube masses instead of
    enumerating restrictions.
    """
    ok = validate_rank(f, d, "RF")
    check_budget("rf_error", subcube_scan_cost(f.n, d, min_codim=1), budget)
    eps, cube, mass = worst_subcube(f, d, min_codim=1)
    return PropertyReport(
        property="RF",
        d=d,
        epsilon=eps,
        witness={
            "S": cube.fixed,
            "gamma": cube.z,
            "mean_square": mass,
            "target": Fraction(1, 1 << cube.codimension),
        },
        mean_zero_ok=ok,
    )
