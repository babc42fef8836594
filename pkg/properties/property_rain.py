"""
Rainbow Embeddings (RAIN)
Edge colourings of a small graph become rainbow embeddings into RHG(d, f)
with probability close to 2^(-|E|)
"""

import logging
from fractions import Fraction
from typing import Optional

from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET, DEFAULT_MC_SAMPLES, DEFAULT_SEED, EXACT_INJECTION_CUTOFF
from core.spectrum import influence
from graphs.counting import rainbow_embedding_density
from graphs.patterns import InjectionMap, SimplePattern

from .property_report import PropertyReport, deviation_interval, validate_rank

logger = logging.getLogger(__name__)


def rain_deviation(
    f: BooleanFunction,
    G: SimplePattern,
    phi: InjectionMap,
    d: int,
    mode: str = "auto",
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = DEFAULT_SEED,
    budget: Optional[int] = DEFAULT_BUDGET,
    cutoff: int = EXACT_INJECTION_CUTOFF,
    n_jobs: int = 1,
    injective_colors: bool = True,
    name: str = "pattern",
) -> PropertyReport:
    """
    |emb_phi(G, RHG(d, f)) - 2^(-|E(G)|)|.

    Args:
        f: Function defining RHG(d, f)
        G: Simple pattern graph
        phi: Vertex injection into the radius-d ball with diameter <= d
        d: Rank
        mode: auto | exact | montecarlo; auto is exact for at most two edges
        samples, seed, budget, cutoff, n_jobs: Counting controls
        injective_colors: Require distinct edge colours
        name: Pattern name recorded in the witness

    Returns:
        PropertyReport: absolute deviation with the embedding density in details
    """
    ok = validate_rank(f, d, "RAIN")
    est = rainbow_embedding_density(
        G,
        phi,
        f,
        d=d,
        mode=mode,
        samples=samples,
        seed=seed,
        budget=budget,
        cutoff=cutoff,
        n_jobs=n_jobs,
        injective_colors=injective_colors,
    )
    target = Fraction(1, 1 << len(G.edges))
    witness = {"pattern": name, "injection": phi.as_dict()}
    details = {"pattern": name, "embedding_density": est.value, "target": target, "edges": len(G.edges)}
    if not injective_colors:
        details["colors"] = "repeating"
    logger.debug(f"RAIN {name}: density {est.value} ({est.method})")

    if est.exact:
        return PropertyReport(
            property="RAIN",
            d=d,
            epsilon=abs(est.value - target),
            witness=witness,
            mean_zero_ok=ok,
            details=details,
        )
    t = float(target)
    return PropertyReport(
        property="RAIN",
        d=d,
        epsilon=abs(est.value - t),
        witness=witness,
        mean_zero_ok=ok,
        method="montecarlo",
        stderr=est.stderr,
        ci=deviation_interval(est.ci_low, est.ci_high, t),
        samples=est.samples,
        seed=est.seed,
        details=details,
    )


def k2_rain_deviation(f: BooleanFunction, u: int, d: int) -> PropertyReport:
    """
    RAIN on a single edge mapped to {u, 0}.

    The density is exactly 1 - Inf_u[f], so the deviation is |Inf_u[f] - 1/2|.
    """
    G = SimplePattern(("0", "1"), (("0", "1"),))
    phi = InjectionMap(f.n, (("0", u), ("1", 0)))
    report = rain_deviation(f, G, phi, d, mode="exact", name=f"K2@{u:x}")
    report.details["identity"] = Fraction(1) - influence(f, u)
    return report
