"""
Spectral Discrepancy (SD)
Every subcube of codimension k <= d carries spectral mass close to 2^(-k)
"""

import logging
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np
from scipy.special import comb

from core.bits import deposit, full_mask, masks_of_weight
from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET
from core.errors import check_budget
from core.spectrum import subcube_masses, walsh_transform
from core.subcube import Subcube

from .property_report import PropertyReport, validate_rank

logger = logging.getLogger(__name__)


def subcube_scan_cost(n: int, d: int, min_codim: int = 0) -> int:
    """Subcubes visited plus one pass over the 2^n squares per fixed set."""
    return sum(
        comb(n, k, exact=True) * ((1 << k) + (1 << n)) for k in range(min_codim, d + 1)
    )


def worst_subcube(
    f: BooleanFunction, d: int, min_codim: int
) -> Tuple[Fraction, Subcube, Fraction]:
    """
    Largest |mass(C) - 2^(-codim C)| over subcubes of codimension min_codim..d.

    Ties keep the first subcube met: codimension ascending, fixed sets in
    lexicographic order, assignments ascending.

    Returns:
        Tuple of (deviation, subcube, its mass)
    """
    spec = walsh_transform(f)
    n = f.n
    whole = 1 << (2 * n)
    best_eps: Optional[Fraction] = None
    best_cube: Optional[Subcube] = None
    best_mass = Fraction(0)
    for k in range(min_codim, d + 1):
        for fixed in masks_of_weight(n, k):
            masses = subcube_masses(spec, fixed)
            if 2 * n + k > 62:
                masses = masses.astype(object)
            gaps = np.abs(masses * (1 << k) - whole)
            j = int(np.argmax(gaps))
            eps = Fraction(int(gaps[j]), 1 << (2 * n + k))
            if best_eps is None or eps > best_eps:
                best_eps = eps
                best_cube = Subcube(n, full_mask(n) & ~fixed, deposit(j, fixed))
                best_mass = Fraction(int(masses[j]), whole)
    return best_eps, best_cube, best_mass


def sd_error(f: BooleanFunction, d: int, budget: Optional[int] = DEFAULT_BUDGET) -> PropertyReport:
    """
    Spectral discrepancy at rank d, exact.

    Args:
        f: Function on F_2^n
        d: Rank, 1 <= d <= n
        budget: Operation cap on the subcube scan

    Raises:
        BudgetExceededError: With the estimated scan cost
    """
    ok = validate_rank(f, d, "SD")
    check_budget("sd_error", subcube_scan_cost(f.n, d), budget)
    eps, cube, mass = worst_subcube(f, d, min_codim=0)
    logger.debug(f"SD(d={d}) on n={f.n}: epsilon={eps}")
    return PropertyReport(
        property="SD",
        d=d,
        epsilon=eps,
        witness={
            "subcube": cube.as_dict(),
            "codimension": cube.codimension,
            "mass": mass,
            "target": Fraction(1, 1 << cube.codimension),
        },
        mean_zero_ok=ok,
    )
