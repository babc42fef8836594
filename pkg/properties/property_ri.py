"""
Restriction Influences (RI)
Influences of the average restriction are close to 1/2
"""

import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from core.bits import full_mask, hamming_ball, hamming_ball_size, masks_of_weight, popcount, spread
from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET, MAX_DIRECT_ORACLE_N
from core.errors import PreconditionError, VerificationError, check_budget
from core.spectrum import influence
from core.subcube import Subcube, restrict, restriction_tables

from .property_report import PropertyReport, validate_rank

logger = logging.getLogger(__name__)


def averaged_restriction_influence(f: BooleanFunction, w: int) -> Fraction:
    """
    E_z Inf_gamma[f|_{S,z}] with S the support of w and gamma all ones on S.

    Each restriction's influence is counted on its own table, then the
    counts are averaged over the 2^(n-|S|) assignments z.

    Raises:
        PreconditionError: If w is zero or not a point of F_2^n
    """
    if not 0 < w < f.size:
        raise PreconditionError(f"shift {w} must be a nonzero point of F_2^{f.n}")
    rows = restriction_tables(f, w)
    width = rows.shape[1]
    flipped = rows[:, np.arange(width) ^ (width - 1)]
    per_restriction = np.count_nonzero(rows != flipped, axis=1)
    logger.debug(f"RI average at w={w}: {rows.shape[0]} restrictions of width {width}")
    return Fraction(int(per_restriction.sum()), rows.shape[0] * width)


def ri_error(f: BooleanFunction, d: int, budget: Optional[int] = DEFAULT_BUDGET) -> PropertyReport:
    """
    max over |S| <= d, gamma != 0 on S of |E_z Inf_gamma[f|_{S,z}] - 1/2|.

    Computes both sides of E_z Inf_gamma[f|_{S,z}] = Inf_{gamma (tensor)_S 0}[f] for
    every shift in the ball and insists they agree.

    Raises:
        VerificationError: If the averaged restriction influence and the
            spectral influence disagree at some shift
    """
    ok = validate_rank(f, d, "RI")
    check_budget("ri_error", hamming_ball_size(f.n, d) * f.size, budget)
    best = Fraction(-1)
    best_w = 0
    for w in hamming_ball(f.n, d, include_zero=False):
        w = int(w)
        averaged = averaged_restriction_influence(f, w)
        spectral = influence(f, w)
        if averaged != spectral:
            raise VerificationError(
                "averaged restriction influence differs from the spectral influence",
                {"gamma": w, "averaged": averaged, "spectral": spectral},
            )
        dev = abs(averaged - Fraction(1, 2))
        if dev > best:
            best, best_w = dev, w
    return PropertyReport(
        property="RI",
        d=d,
        epsilon=best,
        witness={"S": best_w, "gamma": best_w, "influence": influence(f, best_w)},
        mean_zero_ok=ok,
    )


def ri_error_direct(f: BooleanFunction, d: int) -> Fraction:
    """The same deviation by restricting to every subcube and measuring influences there."""
    if f.n > MAX_DIRECT_ORACLE_N:
        raise PreconditionError(f"direct restriction scan is limited to n <= {MAX_DIRECT_ORACLE_N}")
    validate_rank(f, d, "RI")
    n = f.n
    best = Fraction(0)
    for size in range(1, d + 1):
        for S in masks_of_weight(n, size):
            fixed = full_mask(n) & ~S
            count = 1 << popcount(fixed)
            sums = [Fraction(0)] * (1 << size)
            for z in spread(fixed):
                g = restrict(f, Subcube(n, S, int(z)))
                for gamma in range(1, 1 << size):
                    sums[gamma] += influence(g, gamma)
            for gamma in range(1, 1 << size):
                best = max(best, abs(sums[gamma] / count - Fraction(1, 2)))
    return best
