"""
Full Report
Runs every property tester at one rank, adds the canned pattern batteries and
checks the implication chain between the exact deviations
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from core.bits import hamming_ball, hamming_ball_size, popcount
from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET, DEFAULT_MC_SAMPLES, DEFAULT_SEED, EXACT_INJECTION_CUTOFF
from core.errors import PreconditionError, VerificationError, check_budget
from core.spectrum import influence, restricted_mean_square, spectral_mass, walsh_transform
from core.subcube import Subcube
from graphs.cayley import codegree_direct, codegree_target
from graphs.patterns import (
    BipartitePattern,
    InjectionMap,
    SimplePattern,
    bipartite_from_edges,
    complete_graph,
    star_graph,
    subdivision,
)

from .property_dth import dth_deviation
from .property_inf import inf_error, worst_shift
from .property_lsr import lsr_error
from .property_rain import k2_rain_deviation, rain_deviation
from .property_rc import rc_error
from .property_report import PropertyReport
from .property_rf import rf_error
from .property_ri import averaged_restriction_influence, ri_error
from .property_sd import sd_error

logger = logging.getLogger(__name__)

EXACT_TAGS = ("INF", "SD", "RF", "RC", "RI", "LSR")


@dataclass(frozen=True)
class ChainCheck:
    """One relation between two exact deviations."""

    relation: str
    lhs: Fraction
    rhs: Fraction
    holds: bool

    def as_dict(self) -> dict:
        return {"relation": self.relation, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def dth_battery(f: BooleanFunction, d: int) -> List[Tuple[str, BipartitePattern, InjectionMap]]:
    """
    Degree-1 star, degree-2 cherry, 3-edge path and Subdiv(K3) (rank >= 2).

    Two-point injections use 0 and the worst influence shift so the cherry
    and the path probe the largest autocorrelation in the ball.
    Patterns with too many right vertices for n are skipped.
    """
    n = f.n
    w = worst_shift(f, d)
    pair = InjectionMap(n, (("a", 0), ("b", w)))
    battery = [
        ("star1", bipartite_from_edges([("a", "r")]), InjectionMap(n, (("a", 0),))),
        ("cherry", bipartite_from_edges([("a", "r"), ("b", "r")]), pair),
        ("path3", bipartite_from_edges([("a", "r1"), ("b", "r1"), ("b", "r2")]), pair),
    ]
    if d >= 2 and n >= 2:
        triangle = complete_graph(3)
        battery.append(
            (
                "subdiv_k3",
                subdivision(triangle),
                InjectionMap(n, (("0", 0), ("1", 1), ("2", 2))),
            )
        )
    kept = []
    for name, G, psi in battery:
        if len(G.right) ** 2 > f.size:
            logger.info(f"DTH battery: skipping {name}, |R|={len(G.right)} too large for n={n}")
            continue
        kept.append((name, G, psi))
    return kept


def rain_battery(f: BooleanFunction, d: int) -> List[Tuple[str, SimplePattern, InjectionMap]]:
    """K_{1,2} and K3 on {0, e_1, e_2}, both needing rank >= 2."""
    if d < 2 or f.n < 2:
        return []
    phi = InjectionMap(f.n, (("0", 0), ("1", 1), ("2", 2)))
    return [("k12", star_graph(2), phi), ("k3", complete_graph(3), phi)]


def worst_k2_rain(f: BooleanFunction, d: int, budget: Optional[int] = DEFAULT_BUDGET) -> PropertyReport:
    """Largest K2 rainbow deviation over every nonzero u in the radius-d ball."""
    check_budget("worst_k2_rain", hamming_ball_size(f.n, d) * f.size, budget)
    worst: Optional[PropertyReport] = None
    for u in hamming_ball(f.n, d, include_zero=False):
        report = k2_rain_deviation(f, int(u), d)
        if report.details["embedding_density"] != report.details["identity"]:
            raise VerificationError(
                "single-edge rainbow density differs from 1 - Inf_u",
                {"u": int(u), "density": report.details["embedding_density"]},
            )
        if worst is None or report.epsilon > worst.epsilon:
            worst = report
    return worst


def full_report(
    f: BooleanFunction,
    d: int,
    seed: int = DEFAULT_SEED,
    mc_samples: int = DEFAULT_MC_SAMPLES,
    budget: Optional[int] = DEFAULT_BUDGET,
    cutoff: int = EXACT_INJECTION_CUTOFF,
    n_jobs: int = 1,
) -> List[PropertyReport]:
    """
    Every property at rank d.

    Args:
        f: Function on F_2^n
        d: Rank, 1 <= d <= n
        seed: Monte Carlo seed for the pattern batteries
        mc_samples: Monte Carlo sample count
        budget: Operation cap applied to each scan
        cutoff: Injection count below which pattern densities are exact
        n_jobs: joblib workers for Monte Carlo batches

    Returns:
        List of reports: the six exact testers, then DTH and RAIN per pattern

    Raises:
        VerificationError: If an implication in the chain fails
    """
    logger.info(f"Full report on n={f.n}, d={d}")
    reports = [
        inf_error(f, d, budget),
        sd_error(f, d, budget),
        rf_error(f, d, budget),
        rc_error(f, d, budget),
        ri_error(f, d, budget),
        lsr_error(f, d, budget),
    ]
    counting = dict(samples=mc_samples, seed=seed, budget=budget, cutoff=cutoff, n_jobs=n_jobs)
    for name, G, psi in dth_battery(f, d):
        reports.append(dth_deviation(f, G, psi, d=d, name=name, **counting))
    reports.append(worst_k2_rain(f, d, budget))
    for name, G, phi in rain_battery(f, d):
        reports.append(rain_deviation(f, G, phi, d, name=name, **counting))

    failed = [c for c in check_chain(reports) if not c.holds]
    if failed:
        first = failed[0]
        raise VerificationError(f"implication chain broken: {first.relation}", first.as_dict())
    return reports


def _first(reports: Sequence[PropertyReport], tag: str) -> Optional[PropertyReport]:
    for report in reports:
        if report.property == tag and report.exact:
            return report
    return None


def check_chain(reports: Sequence[PropertyReport]) -> List[ChainCheck]:
    """
    The implications between the exact deviations present in reports.

    SD <= 2 INF, RF <= SD, RC <= 2^d RF, RI = INF, LSR = INF / 2 and, when a
    single-edge RAIN report is present, its deviation equals INF.
    """
    by_tag: Dict[str, PropertyReport] = {}
    for tag in EXACT_TAGS:
        report = _first(reports, tag)
        if report is not None:
            by_tag[tag] = report
    checks: List[ChainCheck] = []

    def add(relation: str, lhs: Fraction, rhs: Fraction, equal: bool) -> None:
        holds = lhs == rhs if equal else lhs <= rhs
        if not holds:
            logger.error(f"chain check failed: {relation} ({lhs} vs {rhs})")
        checks.append(ChainCheck(relation, lhs, rhs, holds))

    eps = {tag: Fraction(r.epsilon) for tag, r in by_tag.items()}
    if "SD" in eps and "INF" in eps:
        add("SD <= 2 INF", eps["SD"], 2 * eps["INF"], False)
    if "RF" in eps and "SD" in eps:
        add("RF <= SD", eps["RF"], eps["SD"], False)
    if "RC" in eps and "RF" in eps:
        add("RC <= 2^d RF", eps["RC"], (1 << by_tag["RC"].d) * eps["RF"], False)
    if "RI" in eps and "INF" in eps:
        add("RI = INF", eps["RI"], eps["INF"], True)
    if "LSR" in eps and "INF" in eps:
        add("LSR = INF / 2", eps["LSR"], eps["INF"] / 2, True)
    k2 = [
        r for r in reports
        if r.property == "RAIN" and r.exact and str(r.details.get("pattern", "")).startswith("K2@")
    ]
    if k2 and "INF" in eps:
        add("RAIN(K2) = INF", Fraction(max(r.epsilon for r in k2)), eps["INF"], True)
    return checks


def chain_table(checks: Sequence[ChainCheck]) -> pd.DataFrame:
    """Chain checks as a DataFrame with float columns for display."""
    return pd.DataFrame(
        [
            {"relation": c.relation, "lhs": float(c.lhs), "rhs": float(c.rhs), "holds": c.holds}
            for c in checks
        ],
        columns=["relation", "lhs", "rhs", "holds"],
    )


def evaluate_witness(f: BooleanFunction, report: PropertyReport) -> Union[Fraction, float]:
    """
    Recompute a report's deviation from its witness alone.

    Each tag goes through a route independent of the scan that produced it:
    influences via the restriction tables, masses via the subcube points, restricted
    coefficients via explicit restriction, codegrees via direct counting.

    Raises:
        PreconditionError: For pattern reports other than the single-edge RAIN
    """
    tag = report.property
    w = report.witness
    half = Fraction(1, 2)
    if tag == "INF":
        return abs(averaged_restriction_influence(f, w["gamma"]) - half)
    if tag == "SD":
        cube = Subcube(w["subcube"]["n"], w["subcube"]["S"], w["subcube"]["z"])
        return abs(spectral_mass(walsh_transform(f), cube) - Fraction(1, 1 << cube.codimension))
    if tag == "RF":
        return abs(restricted_mean_square(f, w["S"], w["gamma"]) - Fraction(1, 1 << popcount(w["S"])))
    if tag == "RC":
        # (f*f)(x) = 1 - 2 Inf_x
        return abs(1 - 2 * averaged_restriction_influence(f, w["x"]))
    if tag == "RI":
        return abs(influence(f, w["gamma"]) - half)
    if tag == "LSR":
        return abs(Fraction(codegree_direct(f, w["u"], w["v"]), f.size) - codegree_target(f))
    if tag == "RAIN" and str(w.get("pattern", "")).startswith("K2@"):
        u = int(w["pattern"][3:], 16)
        return abs(half - influence(f, u))
    raise PreconditionError(f"{tag} witnesses name a pattern; re-run the tester instead")
