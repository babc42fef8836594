"""
Bent Functions
The inner product family and an exact bentness certificate
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from core.bits import popcount_array
from core.boolean_function import BooleanFunction
from core.constants import MAX_EXACT_N
from core.errors import PreconditionError, VerificationError
from core.spectrum import autocorrelation, walsh_transform

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BentCertificate:
    """
    Outcome of an exact bentness check.

    Attributes:
        n: Dimension
        ok: Every |W(gamma)| equals 2^(n/2)
        worst_gamma: Smallest gamma maximizing |f^(gamma)^2 - 2^(-n)|
        worst_deviation: That maximum, exact
        autocorrelation_flat: A(gamma) = 0 for every gamma != 0
    """

    n: int
    ok: bool
    worst_gamma: int
    worst_deviation: Fraction
    autocorrelation_flat: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "worst_gamma": self.worst_gamma,
            "worst_deviation": self.worst_deviation,
            "autocorrelation_flat": self.autocorrelation_flat,
        }


def inner_product(m: int) -> BooleanFunction:
    """
    IP(z) = (-1)^(z1 . z2) on 2m bits, z1 the low m bits and z2 the high m bits.

    Args:
        m: Half-dimension, m >= 1

    Raises:
        PreconditionError: If 2m exceeds the exact-table cap
    """
    if m < 1 or 2 * m > MAX_EXACT_N:
        raise PreconditionError(f"inner product half-dimension {m} outside [1, {MAX_EXACT_N // 2}]")
    n = 2 * m
    points = np.arange(1 << n, dtype=np.int64)
    low = points & ((1 << m) - 1)
    high = points >> m
    odd = popcount_array(low & high, m) & 1
    return BooleanFunction(1 - 2 * odd.astype(np.int8), n)


def is_bent(f: BooleanFunction) -> BentCertificate:
    """
    Exact check that every |W(gamma)| = 2^(n/2).

    The flat-autocorrelation criterion is evaluated independently and must
    agree; odd n is never bent.

    Raises:
        VerificationError: If the spectral and autocorrelation criteria disagree
    """
    spec = walsh_transform(f)
    sq = spec.squares()
    gaps = np.abs(sq - f.size)
    worst = int(np.argmax(gaps))
    ok = f.n % 2 == 0 and not gaps.any()
    A = autocorrelation(f).A
    flat = not A[1:].any()
    if ok != flat:
        raise VerificationError(
            "bent criteria disagree",
            {"spectral_flat": ok, "autocorrelation_flat": flat, "gamma": worst},
        )
    logger.debug(f"is_bent(n={f.n}): {ok}")
    return BentCertificate(
        n=f.n,
        ok=ok,
        worst_gamma=worst,
        worst_deviation=Fraction(int(gaps[worst]), 1 << (2 * f.n)),
        autocorrelation_flat=flat,
    )
