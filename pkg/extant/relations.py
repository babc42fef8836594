"""
Relation Battery
Checks tying balanced influences to the extant regularity notions on a single function
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET, DEFAULT_STABLE_DELTA, FLOAT_TOLERANCE
from core.errors import BudgetExceededError, PreconditionError
from core.spectrum import influence
from properties.property_inf import inf_error
from properties.property_sd import sd_error

from .gowers import gowers_norm
from .regularity import r_regular_error
from .stable_influence import max_stable_influence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationCheck:
    """One evaluated relation."""

    name: str
    holds: bool
    lhs: Any
    rhs: Any
    details: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"name": self.name, "holds": self.holds, "lhs": self.lhs, "rhs": self.rhs}
        if self.details:
            out["details"] = self.details
        return out


def r_regularity_bound(f: BooleanFunction, d: int) -> RelationCheck:
    """
    max_gamma |f^(gamma)| <= sqrt(2^(-d) + 2 inf_error(f, d)), compared exactly after squaring.
    """
    r = r_regular_error(f, f.n)
    eps = inf_error(f, d).epsilon
    bound_sq = Fraction(1, 1 << d) + 2 * eps
    return RelationCheck(
        name="R-regularity bound",
        holds=r * r <= bound_sq,
        lhs=r,
        rhs=math.sqrt(bound_sq),
        details={"lhs_squared": r * r, "rhs_squared": bound_sq},
    )


def lift_invariance(f: BooleanFunction, budget: Optional[int] = DEFAULT_BUDGET) -> RelationCheck:
    """
    Lifting f by an ignored top coordinate keeps U^2 and U^3 and zeroes Inf at the new unit vector.
    """
    lifted = f.lift(1)
    w = 1 << f.n
    norms: Dict[str, Any] = {}
    same = True
    for k in (2, 3):
        try:
            before = gowers_norm(f, k, budget=budget).value
            after = gowers_norm(lifted, k, budget=budget).value
        except BudgetExceededError as exc:
            logger.info(f"lift check: U^{k} skipped ({exc})")
            norms[f"U{k}"] = "skipped"
            continue
        norms[f"U{k}"] = {"original": before, "lifted": after}
        same = same and abs(before - after) <= FLOAT_TOLERANCE
    inf_w = influence(lifted, w)
    return RelationCheck(
        name="lift invariance",
        holds=same and inf_w == 0,
        lhs=inf_w,
        rhs=Fraction(0),
        details={"w": w, "norms": norms},
    )


def stable_influence_bound(f: BooleanFunction, d: int, delta: float = DEFAULT_STABLE_DELTA) -> RelationCheck:
    """
    max_i Inf_i^(1-delta)[f] <= (2^(-d) + sd_error(f, d)) (2 - delta)^(d-1), with rho = 1 - delta.

    Each coordinate's stable mass splits over the 2^(d-1) codimension-d
    subcubes that pin it to 1, weighted by (1 - delta)^(|z|-1).
    """
    if not 0.0 <= delta <= 1.0:
        raise PreconditionError(f"delta={delta} outside [0, 1]")
    rho = 1.0 - delta
    value, coordinate = max_stable_influence(f, rho)
    sd = sd_error(f, d).epsilon
    bound = (2.0 ** -d + float(sd)) * (2.0 - delta) ** (d - 1)
    return RelationCheck(
        name="stable influence bound",
        holds=value <= bound + FLOAT_TOLERANCE,
        lhs=value,
        rhs=bound,
        details={"rho": rho, "delta": delta, "coordinate": coordinate, "sd_error": sd},
    )


def relation_battery(
    f: BooleanFunction,
    d: int,
    delta: float = DEFAULT_STABLE_DELTA,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> List[RelationCheck]:
    """
    The R-regularity bound, lift invariance and the stable-influence bound at rank d.

    Failures are reported in the checks, not raised.
    """
    checks = [
        r_regularity_bound(f, d),
        lift_invariance(f, budget),
        stable_influence_bound(f, d, delta),
    ]
    for check in checks:
        logger.info(f"relation {check.name}: {'holds' if check.holds else 'FAILS'}")
    return checks
