"""
Degree-2 Homomorphisms (DTH)
Injective copies of a right-degree <= 2 pattern in BC(f) with a fixed left part
appear with density close to p^(r2) q^(r1)
"""

import logging
import math
from fractions import Fraction
from typing import Optional

from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET, DEFAULT_MC_SAMPLES, DEFAULT_SEED, EXACT_INJECTION_CUTOFF
from core.errors import PreconditionError
from graphs.cayley import codegree_target, degree_target
from graphs.counting import bhom_fixed_left
from graphs.patterns import BipartitePattern, InjectionMap

from .property_report import PropertyReport, deviation_interval, mean_zero_ok

logger = logging.getLogger(__name__)


def dth_target(f: BooleanFunction, G: BipartitePattern) -> Fraction:
    """p^(r2) q^(r1) with p = 1/4 - f^(0)/2 and q = 1/2 - f^(0)/2."""
    return codegree_target(f) ** G.r2 * degree_target(f) ** G.r1


def dth_deviation(
    f: BooleanFunction,
    G: BipartitePattern,
    psi: InjectionMap,
    mode: str = "auto",
    d: Optional[int] = None,
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = DEFAULT_SEED,
    budget: Optional[int] = DEFAULT_BUDGET,
    cutoff: int = EXACT_INJECTION_CUTOFF,
    n_jobs: int = 1,
    name: str = "pattern",
) -> PropertyReport:
    """
    Relative deviation |bhom_psi(G, BC(f)) - p^(r2) q^(r1)| / (p^(r2) q^(r1)).

    Args:
        f: Function defining BC(f)
        G: Pattern with right degrees at most 2 and |R(G)| <= 2^(n/2)
        psi: Left injection; its diameter must not exceed d
        mode: auto | exact | montecarlo
        d: Rank; defaults to the diameter of psi
        samples, seed, budget, cutoff, n_jobs: Counting controls
        name: Pattern name recorded in the witness

    Returns:
        PropertyReport: relative deviation; when the target vanishes or p, q
            are not positive the absolute deviation is reported and flagged
            degenerate

    Raises:
        PreconditionError: If the pattern or injection violate the preconditions
    """
    if G.max_right_degree > 2:
        raise PreconditionError("DTH patterns need right degrees at most 2")
    if len(G.right) ** 2 > f.size:
        raise PreconditionError(f"|R(G)|={len(G.right)} exceeds 2^(n/2) for n={f.n}")
    if d is None:
        d = max(psi.diameter, 1)
    if psi.diameter > d:
        raise PreconditionError(f"left injection diameter {psi.diameter} exceeds d={d}")

    p, q = codegree_target(f), degree_target(f)
    target = dth_target(f, G)
    degenerate = p <= 0 or q <= 0 or target == 0
    if degenerate:
        logger.warning(f"DTH: degenerate normalization (p={p}, q={q}); reporting absolute deviation")

    est = bhom_fixed_left(
        G, psi, f, mode=mode, samples=samples, seed=seed, budget=budget, cutoff=cutoff, n_jobs=n_jobs
    )
    scale = Fraction(1) if degenerate else 1 / abs(target)
    details = {
        "pattern": name,
        "bhom": est.value,
        "target": target,
        "p": p,
        "q": q,
        "r1": G.r1,
        "r2": G.r2,
        "normalization": "absolute" if degenerate else "relative",
    }
    witness = {"pattern": name, "injection": psi.as_dict()}

    if est.exact:
        return PropertyReport(
            property="DTH",
            d=d,
            epsilon=abs(est.value - target) * scale,
            witness=witness,
            mean_zero_ok=mean_zero_ok(f),
            details=details,
        )
    s = float(scale)
    t = float(target)
    return PropertyReport(
        property="DTH",
        d=d,
        epsilon=abs(est.value - t) * s,
        witness=witness,
        mean_zero_ok=mean_zero_ok(f),
        method="montecarlo",
        stderr=est.stderr * s,
        ci=deviation_interval(est.ci_low, est.ci_high, t, s),
        samples=est.samples,
        seed=est.seed,
        details=details,
    )


def within_standard_errors(report: PropertyReport, k: float) -> bool:
    """Whether a sampled deviation is within k standard errors of zero."""
    if report.exact:
        return report.epsilon == 0
    return report.epsilon <= k * report.stderr or math.isclose(report.epsilon, 0.0)
