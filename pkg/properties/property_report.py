"""
Property Report
Result record shared by every quasi-randomness tester
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple, Union

from core.boolean_function import BooleanFunction
from core.errors import PreconditionError
from core.spectrum import walsh_transform

logger = logging.getLogger(__name__)

PROPERTY_TAGS = ("INF", "SD", "RF", "RC", "RI", "LSR", "DTH", "RAIN")


@dataclass(frozen=True)
class PropertyReport:
    """
    Worst-case deviation of one property at rank d.

    Attributes:
        property: One of PROPERTY_TAGS
        d: Rank
        epsilon: Exact Fraction for exact testers, float for sampled ones
        witness: What achieves epsilon (gamma, subcube, pair or pattern)
        mean_zero_ok: |f^(0)| < 1/2
        method: exact | montecarlo
        stderr: Standard error of a sampled epsilon
        ci: 99% confidence interval of a sampled epsilon
        samples: Monte Carlo sample count
        seed: Monte Carlo seed
        details: Extra per-property values (targets, per-pattern deviations)
    """

    property: str
    d: int
    epsilon: Union[Fraction, float]
    witness: Dict[str, Any]
    mean_zero_ok: bool
    method: str = "exact"
    stderr: Optional[float] = None
    ci: Optional[Tuple[float, float]] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.property not in PROPERTY_TAGS:
            raise PreconditionError(f"unknown property tag {self.property!r}")
        if self.epsilon < 0:
            raise PreconditionError("epsilon must be non-negative")

    @property
    def exact(self) -> bool:
        return self.method == "exact"

    def as_dict(self) -> dict:
        out = {
            "property": self.property,
            "d": self.d,
            "epsilon": self.epsilon,
            "method": self.method,
            "mean_zero_ok": self.mean_zero_ok,
            "witness": self.witness,
        }
        if not self.exact:
            out["stderr"] = self.stderr
            out["ci"] = list(self.ci) if self.ci else None
            out["samples"] = self.samples
            out["seed"] = self.seed
        if self.details:
            out["details"] = self.details
        return out


def mean_zero_ok(f: BooleanFunction) -> bool:
    """|f^(0)| < 1/2, the standing assumption of every property."""
    return 2 * abs(int(walsh_transform(f).W[0])) < f.size


def validate_rank(f: BooleanFunction, d: int, tag: str) -> bool:
    """
    Check 1 <= d <= n and flag a degenerate mean.

    Returns:
        bool: mean_zero_ok(f)
    """
    if not 1 <= d <= f.n:
        raise PreconditionError(f"{tag}: rank d={d} outside [1, {f.n}]")
    ok = mean_zero_ok(f)
    if not ok:
        logger.warning(f"{tag}: |f^(0)| >= 1/2, property preconditions fail (reported, not fatal)")
    return ok


def deviation_interval(low: float, high: float, target: float, scale: float = 1.0) -> Tuple[float, float]:
    """Range of scale * |x - target| for x in the sampled interval [low, high]."""
    if low <= target <= high:
        nearest = 0.0
    else:
        nearest = min(abs(low - target), abs(high - target))
    farthest = max(abs(low - target), abs(high - target))
    return nearest * scale, farthest * scale
