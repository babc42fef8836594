"""
Regularity Comparators
R-regularity (small low-weight Fourier coefficients) and Z/2^n-regularity
(small correlation with additive characters of the cyclic group)
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

import numpy as np
import pandas as pd
from scipy import fft

from core.bits import full_mask, weights
from core.boolean_function import BooleanFunction, xor_function
from core.constants import FLOAT_TOLERANCE, MAX_ZP_N
from core.errors import PreconditionError
from core.spectrum import walsh_transform

logger = logging.getLogger(__name__)


def r_regular_error(f: BooleanFunction, d: int, include_zero: bool = True) -> Fraction:
    """
    max over |gamma| <= d of |f^(gamma)|, exactly.

    Args:
        f: Function on F_2^n
        d: Weight bound, 0 <= d <= n
        include_zero: Count gamma = 0; with it excluded and d = 0 the result is 0
    """
    if not 0 <= d <= f.n:
        raise PreconditionError(f"weight bound {d} outside [0, {f.n}]")
    return _r_regular_witness(f, d, include_zero)[0]


def _r_regular_witness(f: BooleanFunction, d: int, include_zero: bool) -> Tuple[Fraction, int]:
    spec = walsh_transform(f)
    w = weights(f.n)
    keep = w <= d
    if not include_zero:
        keep = keep & (w > 0)
    candidates = np.flatnonzero(keep)
    if candidates.size == 0:
        return Fraction(0), 0
    mags = np.abs(spec.W[candidates])
    j = int(np.argmax(mags))
    return Fraction(int(mags[j]), f.size), int(candidates[j])


def r_regular_profile(f: BooleanFunction, include_zero: bool = True) -> pd.DataFrame:
    """R-regularity error for every weight bound d = 0..n, with the witness gamma."""
    rows = []
    for d in range(f.n + 1):
        eps, gamma = _r_regular_witness(f, d, include_zero)
        rows.append({"d": d, "epsilon": eps, "epsilon_float": float(eps), "gamma": gamma})
    return pd.DataFrame(rows, columns=["d", "epsilon", "epsilon_float", "gamma"])


def binary_expansion_lift(z: int, n: int) -> int:
    """
    The point z* of F_2^n whose coordinate i is bit i-1 of z.

    With coordinate i stored in integer bit i-1 this is the identity on encodings.
    """
    if not 0 <= z < (1 << n):
        raise PreconditionError(f"{z} outside Z/2^{n}")
    return z & full_mask(n)


@dataclass(frozen=True)
class ZpCorrelation:
    """Largest correlation with a nonzero additive character of Z/2^n."""

    n: int
    j: int
    magnitude: float

    def as_dict(self) -> dict:
        return {"n": self.n, "j": self.j, "magnitude": self.magnitude}


def zp_correlations(f: BooleanFunction) -> np.ndarray:
    """
    |E_z f(z*) exp(-2 pi i j z / 2^n)| for every j in Z/2^n.

    Raises:
        PreconditionError: If n exceeds the complex-transform cap
    """
    if f.n > MAX_ZP_N:
        raise PreconditionError(f"Z/2^n transform limited to n <= {MAX_ZP_N}")
    values = f.table.astype(np.float64)
    return np.abs(fft.fft(values)) / f.size


def zp_regularity_error(f: BooleanFunction) -> ZpCorrelation:
    """Worst nonzero character, the smallest j among values within tolerance of the maximum."""
    mags = zp_correlations(f)
    nonzero = mags[1:]
    top = float(nonzero.max())
    j = int(np.flatnonzero(nonzero >= top - FLOAT_TOLERANCE)[0]) + 1
    return ZpCorrelation(n=f.n, j=j, magnitude=float(mags[j]))


def zp_decay_table(n_values: Iterable[int]) -> pd.DataFrame:
    """
    Worst Z/2^n correlation M(n) of z -> chi_1(z*) and successive ratios.

    Returns:
        pd.DataFrame: columns n, j, magnitude, ratio (NaN on the first row)
    """
    rows = []
    previous = None
    for n in n_values:
        corr = zp_regularity_error(xor_function(n))
        ratio = corr.magnitude / previous if previous else float("nan")
        rows.append({"n": n, "j": corr.j, "magnitude": corr.magnitude, "ratio": ratio})
        previous = corr.magnitude
    return pd.DataFrame(rows, columns=["n", "j", "magnitude", "ratio"])


def geometric_decay_rate(table: pd.DataFrame) -> float:
    """(M(last) / M(first))^(1 / span) over a decay table."""
    first, last = table.iloc[0], table.iloc[-1]
    span = int(last["n"] - first["n"])
    if span <= 0:
        raise PreconditionError("decay rate needs at least two dimensions")
    return float((last["magnitude"] / first["magnitude"]) ** (1.0 / span))


def zp_log_rank(eps: float, c0: float) -> int:
    """k = ceil(-c0 ln eps) for 0 < eps < 1."""
    if not 0 < eps < 1:
        raise PreconditionError("eps must lie in (0, 1)")
    if c0 <= 0:
        raise PreconditionError("c0 must be positive")
    return math.ceil(-c0 * math.log(eps))


def theorem_case_split(n: int, k: int) -> Dict[str, object]:
    """
    Correlations of chi_gamma, gamma all-ones on the low n-k coordinates, split by 2^k | c.

    For c = 2^k a the magnitude equals the all-ones character's correlation on
    n-k bits at a; every other c gives zero.

    Returns:
        Dict with gamma, the maxima on both sides of the split, and whether
        the divisible side matches the reduced transform
    """
    if not 1 <= k < n:
        raise PreconditionError(f"need 1 <= k < n, got k={k}, n={n}")
    gamma = full_mask(n - k)
    mags = zp_correlations(BooleanFunction.character(n, gamma))
    c = np.arange(1 << n)
    divisible = (c % (1 << k) == 0) & (c > 0)
    other = c % (1 << k) != 0
    reduced = zp_correlations(xor_function(n - k))
    matches = bool(np.allclose(mags[divisible], reduced[1:], atol=FLOAT_TOLERANCE))
    result = {
        "n": n,
        "k": k,
        "gamma": gamma,
        "divisible_max": float(mags[divisible].max()),
        "other_max": float(mags[other].max()),
        "reduced_max": float(reduced[1:].max()),
        "divisible_matches_reduced": matches,
    }
    logger.debug(f"case split n={n}, k={k}: {result}")
    return result
