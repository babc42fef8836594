"""
Balanced Influences (INF)
Every shift of weight 1..d flips f with probability close to 1/2
"""

import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from core.bits import hamming_ball, hamming_ball_size, popcount
from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET
from core.errors import check_budget
from core.spectrum import autocorrelation, influence

from .property_report import PropertyReport, validate_rank

logger = logging.getLogger(__name__)


def worst_shift(f: BooleanFunction, d: int) -> int:
    """Smallest gamma with 0 < |gamma| <= d maximizing |A(gamma)|."""
    ball = hamming_ball(f.n, d, include_zero=False)
    values = np.abs(autocorrelation(f).A[ball])
    return int(ball[int(np.argmax(values))])


def inf_error(f: BooleanFunction, d: int, budget: Optional[int] = DEFAULT_BUDGET) -> PropertyReport:
    """
    max over 0 < |gamma| <= d of |Inf_gamma[f] - 1/2|, exactly.

    Since Inf_gamma = (2^n - A(gamma)) / 2^(n+1), the deviation is
    |A(gamma)| / 2^(n+1) and the scan is a lookup over the Hamming ball.

    Args:
        f: Function on F_2^n
        d: Rank, 1 <= d <= n
        budget: Operation cap

    Returns:
        PropertyReport: witness carries gamma, its weight and its influence
    """
    ok = validate_rank(f, d, "INF")
    check_budget("inf_error", f.n * f.size + hamming_ball_size(f.n, d), budget)
    gamma = worst_shift(f, d)
    a = autocorrelation(f).value(gamma)
    eps = Fraction(abs(a), 2 * f.size)
    logger.debug(f"INF(d={d}) on n={f.n}: epsilon={eps} at gamma={gamma:#x}")
    return PropertyReport(
        property="INF",
        d=d,
        epsilon=eps,
        witness={"gamma": gamma, "weight": popcount(gamma), "influence": influence(f, gamma)},
        mean_zero_ok=ok,
    )
