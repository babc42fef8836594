"""
Restriction Convolution (RC)
Averaged self-convolutions of restrictions look like the indicator of 0
"""

import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from core.bits import deposit, full_mask, hamming_ball_size, masks_of_weight, popcount, spread
from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET, MAX_DIRECT_ORACLE_N
from core.errors import PreconditionError, check_budget
from core.spectrum import autocorrelation, convolve
from core.subcube import Subcube, restrict

from .property_inf import worst_shift
from .property_report import PropertyReport, validate_rank

logger = logging.getLogger(__name__)


def rc_error(f: BooleanFunction, d: int, budget: Optional[int] = DEFAULT_BUDGET) -> PropertyReport:
    """
    max over |S| <= d and x in F_2^S of |E_z (f|*f|)(x) - [x = 0]|.

    Averaging over z turns the restricted convolution at x into (f*f)(x (tensor)_S 0),
    so x = 0 contributes nothing and the rest is max over 0 < |w| <= d of |A(w)| / 2^n.
    """
    ok = validate_rank(f, d, "RC")
    check_budget("rc_error", f.n * f.size + hamming_ball_size(f.n, d), budget)
    w = worst_shift(f, d)
    a = autocorrelation(f).value(w)
    return PropertyReport(
        property="RC",
        d=d,
        epsilon=Fraction(abs(a), f.size),
        witness={"S": w, "x": w, "convolution": Fraction(a, f.size)},
        mean_zero_ok=ok,
    )


def rc_error_direct(f: BooleanFunction, d: int) -> Fraction:
    """
    The same deviation by restricting to every subcube and convolving.

    Exponential in n; used to confirm the autocorrelation reduction.
    """
    if f.n > MAX_DIRECT_ORACLE_N:
        raise PreconditionError(f"direct restriction scan is limited to n <= {MAX_DIRECT_ORACLE_N}")
    validate_rank(f, d, "RC")
    n = f.n
    best = Fraction(0)
    for size in range(1, d + 1):
        for S in masks_of_weight(n, size):
            fixed = full_mask(n) & ~S
            total = np.zeros(1 << size, dtype=np.int64)
            for z in spread(fixed):
                g = restrict(f, Subcube(n, S, int(z)))
                total += convolve(g, g)
            count = (1 << popcount(fixed)) << size
            for x in range(1 << size):
                target = 1 if x == 0 else 0
                dev = abs(Fraction(int(total[x]), count) - target)
                if dev > best:
                    best = dev
                    logger.debug(f"RC direct: new worst {dev} at S={S:#x}, x={deposit(x, S):#x}")
    return best
