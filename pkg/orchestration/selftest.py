"""
Self-Test Battery
Identity and inequality checks that must hold for every Boolean function,
run over seeded random inputs and the built-in constructions
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from constructions.bent import inner_product, is_bent
from constructions.tower import builtin_tower_battery, verify_tower
from core.bits import full_mask
from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_SEED
from core.errors import QuasiRandomError, VerificationError
from core.spectrum import (
    autocorrelation,
    autocorrelation_direct,
    fwht,
    influence,
    restricted_coefficient_direct,
    restricted_fourier_identity,
    restricted_mean_square,
    spectral_mass,
    walsh_transform,
)
from core.subcube import Subcube
from graphs.counting import rainbow_embedding_density
from graphs.expansion import rainbow_density_via_subdivision, subgraph_expansion_sum
from graphs.patterns import InjectionMap, complete_graph, path_graph, small_graphs, star_graph
from properties.full_report import EXACT_TAGS, check_chain, evaluate_witness, worst_k2_rain
from properties.property_inf import inf_error
from properties.property_lsr import lsr_error, lsr_validate_codegree
from properties.property_rc import rc_error
from properties.property_rf import rf_error
from properties.property_ri import ri_error
from properties.property_sd import sd_error

logger = logging.getLogger(__name__)

# random functions per dimension in the chain check
DEFAULT_CHAIN_FUNCTIONS = 20


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one battery entry, with the first failing case when it fails."""

    name: str
    passed: bool
    cases: int
    witness: Dict[str, Any] = field(default_factory=dict)
    message: str = ""

    def as_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "cases": self.cases}
        if not self.passed:
            out["witness"] = self.witness
            out["message"] = self.message
        return out


class _Failure(Exception):
    def __init__(self, message: str, witness: Dict[str, Any]):
        self.witness = witness
        super().__init__(message)


def _rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream])))


def check_parseval(seed: int) -> int:
    """sum W(gamma)^2 = 4^n and the butterfly is an involution up to 2^n."""
    cases = 0
    for n in range(1, 11):
        f = BooleanFunction.random(n, seed, stream=n)
        spec = walsh_transform(f)
        if spec.parseval_total() != 1 << (2 * n):
            raise _Failure("Parseval total differs from 4^n", {"n": n, "total": spec.parseval_total()})
        if not np.array_equal(fwht(spec.W), f.table.astype(np.int64) << n):
            raise _Failure("transform applied twice is not 2^n times the identity", {"n": n})
        cases += 1
    return cases


def check_autocorrelation_influence(seed: int) -> int:
    """Butterfly autocorrelation matches the direct sum and Inf = (2^n - A) / 2^(n+1)."""
    cases = 0
    for n in range(1, 9):
        f = BooleanFunction.random(n, seed, stream=100 + n)
        fast, slow = autocorrelation(f).A, autocorrelation_direct(f).A
        if not np.array_equal(fast, slow):
            x = int(np.flatnonzero(fast != slow)[0])
            raise _Failure("autocorrelation disagrees with the direct sum", {"n": n, "x": x})
        points = np.arange(f.size)
        for gamma in range(f.size):
            flips = int(np.count_nonzero(f.table != f.table[points ^ gamma]))
            if influence(f, gamma) != Fraction(flips, f.size):
                raise _Failure("influence disagrees with the flip count", {"n": n, "gamma": gamma})
            cases += 1
    return cases


def check_restriction_lemma(seed: int, n: int = 6, trials: int = 40) -> int:
    """Restricted coefficients from the global spectrum match explicit restriction."""
    f = BooleanFunction.random(n, seed, stream=200)
    rng = _rng(seed, 201)
    for trial in range(trials):
        S = int(rng.integers(0, 1 << n))
        z = int(rng.integers(0, 1 << n)) & ~S & full_mask(n)
        gamma = int(rng.integers(0, 1 << n)) & S
        cube = Subcube(n, S, z)
        if restricted_fourier_identity(f, cube, gamma) != restricted_coefficient_direct(f, cube, gamma):
            raise _Failure("restriction identity fails", {"S": S, "z": z, "gamma": gamma})
        complement = full_mask(n) & ~S
        if restricted_mean_square(f, S, gamma) != spectral_mass(walsh_transform(f), Subcube(n, complement, gamma)):
            raise _Failure("subcube spectral mass differs from the restricted mean square", {"S": S, "gamma": gamma})
    return trials


def _six_reports(f: BooleanFunction, d: int):
    return [
        inf_error(f, d),
        sd_error(f, d),
        rf_error(f, d),
        rc_error(f, d),
        ri_error(f, d),
        lsr_error(f, d),
    ]


def check_chain_random(seed: int, n: int = 8, functions: int = DEFAULT_CHAIN_FUNCTIONS) -> int:
    """Implication chain and witness re-evaluation on random functions, d = 1..3."""
    cases = 0
    for i in range(functions):
        f = BooleanFunction.random(n, seed, stream=300 + i)
        for d in (1, 2, 3):
            reports = _six_reports(f, d)
            for check in check_chain(reports):
                if not check.holds:
                    raise _Failure(f"chain relation {check.relation} fails", {"function": i, "d": d, **check.as_dict()})
            for report in reports:
                if report.property in EXACT_TAGS and evaluate_witness(f, report) != report.epsilon:
                    raise _Failure(
                        "witness does not reproduce the reported deviation",
                        {"function": i, "d": d, "property": report.property},
                    )
            cases += 1
    return cases


def check_codegree(seed: int, n: int = 7) -> int:
    f = BooleanFunction.random(n, seed, stream=400)
    cases = 0
    for w in (1, 3, 1 << (n - 1), full_mask(n)):
        cases += len(lsr_validate_codegree(f, w, pairs=4, seed=seed))
    return cases


def check_k2_rainbow(seed: int, n: int = 6) -> int:
    """Single-edge rainbow density equals 1 - Inf_u on the whole radius-3 ball."""
    f = BooleanFunction.random(n, seed, stream=500)
    report = worst_k2_rain(f, 3)
    if report.epsilon != inf_error(f, 3).epsilon:
        raise _Failure("worst single-edge rainbow deviation differs from the influence error", report.witness)
    return 1


def check_subgraph_expansion(seed: int, points: int = 5) -> int:
    """sum over subgraphs of Subdiv(G) equals (1 + x + y + z)^|E| on every graph up to 4 vertices."""
    rng = _rng(seed, 600)
    cases = 0
    for G in small_graphs(4):
        for x, y, z in rng.uniform(-1.0, 1.0, size=(points, 3)):
            got = subgraph_expansion_sum(G, x, y, z)
            want = (1.0 + x + y + z) ** len(G.edges)
            if abs(got - want) > 1e-12 * max(1.0, abs(want)):
                raise _Failure("subgraph expansion fails", {"edges": list(G.edges), "x": x, "y": y, "z": z})
            cases += 1
    return cases


def check_subdivision_rainbow(seed: int, n: int = 5) -> int:
    """Rainbow density by direct counting equals its subdivision expansion."""
    f = BooleanFunction.random(n, seed, stream=700)
    phi = InjectionMap(n, (("0", 0), ("1", 1), ("2", 2), ("3", 3)))
    cases = 0
    for G in (complete_graph(2), star_graph(2), path_graph(4), complete_graph(3)):
        sub_phi = InjectionMap.from_dict(n, {v: phi[v] for v in G.vertices})
        direct = rainbow_embedding_density(G, sub_phi, f, mode="exact").value
        expanded = rainbow_density_via_subdivision(G, sub_phi, f)
        if direct != expanded:
            raise _Failure("subdivision expansion disagrees with direct rainbow count", {"edges": list(G.edges)})
        cases += 1
    return cases


def check_bent(seed: int) -> int:
    for m in range(1, 5):
        if not is_bent(inner_product(m)).ok:
            raise _Failure("inner product is not bent", {"m": m})
    return 4


def check_towers(seed: int) -> int:
    battery = builtin_tower_battery()
    for name, g, code in battery:
        verdict = verify_tower(g, code)
        if not verdict.ok:
            raise _Failure(f"tower {name} fails", verdict.as_dict())
    return len(battery)


SELFTEST_CHECKS: Dict[str, Callable[[int], int]] = {
    "parseval": check_parseval,
    "autocorrelation-influence": check_autocorrelation_influence,
    "restriction-lemma": check_restriction_lemma,
    "implication-chain": check_chain_random,
    "codegree": check_codegree,
    "k2-rainbow": check_k2_rainbow,
    "subgraph-expansion": check_subgraph_expansion,
    "subdivision-rainbow": check_subdivision_rainbow,
    "bent": check_bent,
    "tower": check_towers,
}


def _run_check(name: str, seed: int) -> CheckResult:
    try:
        cases = SELFTEST_CHECKS[name](seed)
    except _Failure as exc:
        return CheckResult(name, False, 0, exc.witness, str(exc))
    except VerificationError as exc:
        return CheckResult(name, False, 0, exc.witness, str(exc))
    except QuasiRandomError as exc:
        return CheckResult(name, False, 0, {}, str(exc))
    return CheckResult(name, True, cases)


def run_selftest(seed: int = DEFAULT_SEED, n_jobs: int = 1, names: Optional[List[str]] = None) -> List[CheckResult]:
    """
    Run the battery, one joblib task per check.

    Results come back in battery order whatever the worker count.
    """
    selected = list(SELFTEST_CHECKS) if names is None else names
    logger.info(f"Self-test: {len(selected)} checks, seed={seed}, n_jobs={n_jobs}")
    results = Parallel(n_jobs=n_jobs)(delayed(_run_check)(name, seed) for name in selected)
    for result in results:
        if not result.passed:
            logger.error(f"self-test {result.name} FAILED: {result.message}")
    return list(results)


def selftest_table(results: List[CheckResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"name": r.name, "passed": r.passed, "cases": r.cases} for r in results],
        columns=["name", "passed", "cases"],
    )
