"""
Composition of a bent function with a parity-check matrix.

f(x) = g(Hx) has A_f(gamma) = 2^k A_g(H gamma), so f inherits a flat
autocorrelation on every shift outside the code and is blind to shifts inside
it. The minimum codeword weight therefore sets the exact rank at which f is
balanced.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from core.bits import popcount, popcount_array
from core.boolean_function import BooleanFunction
from core.errors import PreconditionError
from core.spectrum import autocorrelation, influence, walsh_transform

from .bent import BentCertificate, inner_product, is_bent
from .linear_code import (
    LinearCode,
    example_extended_hamming,
    extended_hamming,
    hamming_parity_check,
    min_kernel_weight,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TowerVerdict:
    """
    Facts established for one composition f = g o H.

    Attributes:
        n: Length of the code (dimension of f)
        k: Code dimension
        d_star: Minimum codeword weight minus one (n when k = 0)
        bent: Certificate for g
        inf_zero: Inf_gamma[f] = 1/2 for every 0 < |gamma| <= d_star
        inf_witness: A gamma in that ball with a different influence
        separation_witness: A codeword of weight d_star + 1 (Inf = 0 there)
        separation_ok: The separation witness exists with zero influence
        mean: f^(0)
        mean_ok: |f^(0)| = 2^(-(n-k)/2) and |f^(0)| <= 1/2
        mean_strict: |f^(0)| < 1/2
        kernel_indicator_ok: (f*f)(x) = [x in ker H] for every x
        kernel_witness: First x where it fails
    """

    n: int
    k: int
    d_star: int
    bent: BentCertificate
    inf_zero: bool
    inf_witness: Optional[int]
    separation_witness: Optional[int]
    separation_ok: bool
    mean: Fraction
    mean_ok: bool
    mean_strict: bool
    kernel_indicator_ok: bool
    kernel_witness: Optional[int]

    @property
    def ok(self) -> bool:
        return self.bent.ok and self.inf_zero and self.separation_ok and self.mean_ok and self.kernel_indicator_ok

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d_star": self.d_star,
            "ok": self.ok,
            "bent": self.bent.as_dict(),
            "inf_zero": self.inf_zero,
            "inf_witness": self.inf_witness,
            "separation_witness": self.separation_witness,
            "separation_ok": self.separation_ok,
            "mean": self.mean,
            "mean_ok": self.mean_ok,
            "mean_strict": self.mean_strict,
            "kernel_indicator_ok": self.kernel_indicator_ok,
            "kernel_witness": self.kernel_witness,
        }


def compose(g: BooleanFunction, code: LinearCode) -> BooleanFunction:
    """
    Tabulate f(x) = g(Hx) over F_2^n.

    Raises:
        PreconditionError: If g does not live on n - k bits
    """
    if g.n != code.redundancy:
        raise PreconditionError(f"g has {g.n} bits but H has {code.redundancy} rows")
    return BooleanFunction(g.table[code.syndromes()], code.n)


def autocorrelation_pushforward(g: BooleanFunction, code: LinearCode) -> np.ndarray:
    """2^k A_g(H gamma) for every gamma, which equals A_f for f = g o H."""
    if g.n != code.redundancy:
        raise PreconditionError(f"g has {g.n} bits but H has {code.redundancy} rows")
    return autocorrelation(g).A[code.syndromes()] << code.k


def kernel_indicator_check(f: BooleanFunction, code: LinearCode) -> Tuple[bool, Optional[int]]:
    """
    Whether (f*f)(x) = [x in ker H] everywhere, with the first failing x.

    Holds for f = g o H exactly when g is bent.
    """
    A = autocorrelation(f).A
    expected = np.where(code.syndromes() == 0, f.size, 0)
    bad = np.flatnonzero(A != expected)
    if bad.size:
        return False, int(bad[0])
    return True, None


def _inf_ball_check(f: BooleanFunction, d: int) -> Tuple[bool, Optional[int]]:
    if d < 1:
        return True, None
    A = autocorrelation(f).A
    points = np.arange(f.size, dtype=np.int64)
    w = popcount_array(points, f.n)
    bad = np.flatnonzero((w >= 1) & (w <= d) & (A != 0))
    if bad.size:
        return False, int(bad[0])
    return True, None


def verify_tower(g: BooleanFunction, code: LinearCode) -> TowerVerdict:
    """
    Check that g o H is balanced up to rank d* and no further.

    d* is the minimum codeword weight minus one; the smallest minimum-weight
    codeword is the separation witness. With k = 0 there is none and d* = n.

    Returns:
        TowerVerdict: Every fact with its witness; failures are recorded,
            not raised
    """
    f = compose(g, code)
    bent = is_bent(g)
    if code.k == 0:
        d_star, separation, separation_ok = code.n, None, True
    else:
        weight, separation = min_kernel_weight(code)
        d_star = weight - 1
        separation_ok = influence(f, separation) == 0 and popcount(separation) == d_star + 1

    inf_zero, inf_witness = _inf_ball_check(f, d_star)
    mean = walsh_transform(f).mean()
    if code.redundancy % 2 == 0:
        expected = Fraction(1, 1 << (code.redundancy // 2))
        mean_ok = abs(mean) == expected and abs(mean) <= Fraction(1, 2)
    else:
        mean_ok = False
    kernel_ok, kernel_witness = kernel_indicator_check(f, code)

    verdict = TowerVerdict(
        n=code.n,
        k=code.k,
        d_star=d_star,
        bent=bent,
        inf_zero=inf_zero,
        inf_witness=inf_witness,
        separation_witness=separation,
        separation_ok=separation_ok,
        mean=mean,
        mean_ok=mean_ok,
        mean_strict=abs(mean) < Fraction(1, 2),
        kernel_indicator_ok=kernel_ok,
        kernel_witness=kernel_witness,
    )
    logger.info(f"Tower [{code.n},{code.k}] with d*={d_star}: {'ok' if verdict.ok else 'FAILED'}")
    return verdict


def builtin_tower_battery() -> List[Tuple[str, BooleanFunction, LinearCode]]:
    """Bent g paired with codes of matching even redundancy."""
    return [
        ("ip2-hamming2", inner_product(1), hamming_parity_check(2)),
        ("ip4-hamming4", inner_product(2), hamming_parity_check(4)),
        ("ip4-extended3", inner_product(2), extended_hamming(3)),
        ("ip4-example", inner_product(2), example_extended_hamming()),
    ]
