"""
Bipartite homomorphism and rainbow embedding densities.

Both densities are averages over injective maps of a product of per-vertex
0/1 indicators over F_2^n:

    E over injective (c_1, ..., c_m) of  prod_r I_r(c_r)

Exact values use inclusion-exclusion over set partitions of the index set,
which costs Bell(m) sums of length 2^n rather than (2^n)_m tuples. Monte Carlo
draws injective tuples by rejection from a counter-based generator, in fixed
size batches keyed by (seed, batch index), so the estimate does not depend on
how batches are spread across workers.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from joblib import Parallel, delayed
from scipy.stats import norm

from core.boolean_function import BooleanFunction
from core.constants import (
    CI_LEVEL,
    DEFAULT_BUDGET,
    DEFAULT_MC_SAMPLES,
    DEFAULT_SEED,
    EXACT_INJECTION_CUTOFF,
    MC_BATCH_SIZE,
)
from core.bits import popcount
from core.errors import PreconditionError, check_budget

from .cayley import neighborhood_indicator, rhg_color_indicator
from .patterns import BipartitePattern, InjectionMap, SimplePattern

logger = logging.getLogger(__name__)

MODES = ("auto", "exact", "montecarlo")


@dataclass(frozen=True)
class Estimate:
    """A density, exact or sampled."""

    value: Union[Fraction, float]
    method: str
    stderr: Optional[float] = None
    ci_low: Optional[float] = None
    ci_high: Optional[float] = None
    samples: Optional[int] = None
    seed: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.method == "exact"

    def as_dict(self) -> dict:
        out = {"value": self.value, "method": self.method}
        if not self.exact:
            out.update(
                stderr=self.stderr,
                ci=[self.ci_low, self.ci_high],
                samples=self.samples,
                seed=self.seed,
            )
        return out


def set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    """All set partitions of items (Bell(len(items)) of them)."""
    if not items:
        yield []
        return
    first, rest = items[0], list(items[1:])
    for partial in set_partitions(rest):
        yield [[first]] + partial
        for i in range(len(partial)):
            yield partial[:i] + [[first] + partial[i]] + partial[i + 1:]


def bell_number(m: int) -> int:
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def falling_factorial(size: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= size - i
    return out


def injective_product_sum(indicators: Sequence[np.ndarray]) -> int:
    """
    Sum over injective (c_1..c_m) of prod_r I_r(c_r), exactly.

    Uses sum over partitions pi of prod over blocks B of
    (-1)^(|B|-1) (|B|-1)! sum_c prod_{r in B} I_r(c).
    """
    m = len(indicators)
    if m == 0:
        return 1
    block_sums: Dict[int, int] = {}

    def block_sum(block: List[int]) -> int:
        key = sum(1 << r for r in block)
        if key not in block_sums:
            prod = indicators[block[0]].copy()
            for r in block[1:]:
                prod *= indicators[r]
            block_sums[key] = int(prod.sum())
        return block_sums[key]

    total = 0
    for partition in set_partitions(list(range(m))):
        term = 1
        for block in partition:
            size = len(block)
            term *= (-1) ** (size - 1) * math.factorial(size - 1) * block_sum(block)
            if term == 0:
                break
        total += term
    return total


def _exact_cost(m: int, n: int) -> int:
    return bell_number(m) * max(m, 1) * (1 << n)


def _choose_exact(mode: str, m: int, n: int, budget: Optional[int], cutoff: int, scan: str) -> bool:
    if mode not in MODES:
        raise PreconditionError(f"unknown counting mode {mode!r}; expected one of {MODES}")
    if mode == "montecarlo":
        return False
    cost = _exact_cost(m, n)
    if mode == "exact":
        check_budget(scan, cost, budget)
        return True
    injections = falling_factorial(1 << n, m)
    exact = (m <= 2 or injections <= cutoff) and (budget is None or cost <= budget)
    logger.debug(f"{scan}: m={m}, injections={injections}, exact={exact}")
    return exact


def _mc_batch(
    indicators: np.ndarray, n: int, seed: int, batch: int, size: int
) -> Tuple[float, float]:
    """Sum and sum of squares of the product over `size` uniform injective tuples."""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, batch])))
    m = indicators.shape[0]
    draws = rng.integers(0, 1 << n, size=(size, m), dtype=np.int64)
    if m > 1:
        while True:
            ordered = np.sort(draws, axis=1)
            bad = np.flatnonzero((ordered[:, 1:] == ordered[:, :-1]).any(axis=1))
            if bad.size == 0:
                break
            draws[bad] = rng.integers(0, 1 << n, size=(bad.size, m), dtype=np.int64)
    values = np.ones(size, dtype=np.float64)
    for r in range(m):
        values *= indicators[r][draws[:, r]]
    return float(values.sum()), float(np.dot(values, values))


def monte_carlo_injective_mean(
    indicators: Sequence[np.ndarray],
    n: int,
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = DEFAULT_SEED,
    n_jobs: int = 1,
) -> Estimate:
    """
    Sampled E over injective tuples of prod_r I_r(c_r) with a normal 99% interval.

    Args:
        indicators: m vectors of length 2^n
        n: Dimension
        samples: Number of injective tuples
        seed: Global seed; batch b uses the stream (seed, b)
        n_jobs: joblib workers for the batches

    Returns:
        Estimate: Sample mean with standard error and confidence interval
    """
    if samples < 2:
        raise PreconditionError("Monte Carlo needs at least two samples")
    m = len(indicators)
    if m > (1 << n):
        raise PreconditionError(f"cannot place {m} distinct points in F_2^{n}")
    stacked = np.asarray(indicators, dtype=np.float64).reshape(m, 1 << n)
    sizes = [MC_BATCH_SIZE] * (samples // MC_BATCH_SIZE)
    if samples % MC_BATCH_SIZE:
        sizes.append(samples % MC_BATCH_SIZE)

    if n_jobs == 1:
        parts = [_mc_batch(stacked, n, seed, b, s) for b, s in enumerate(sizes)]
    else:
        parts = Parallel(n_jobs=n_jobs)(
            delayed(_mc_batch)(stacked, n, seed, b, s) for b, s in enumerate(sizes)
        )

    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    mean = total / samples
    variance = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    stderr = math.sqrt(variance / samples)
    z = float(norm.ppf(0.5 + CI_LEVEL / 2))
    return Estimate(
        value=mean,
        method="montecarlo",
        stderr=stderr,
        ci_low=mean - z * stderr,
        ci_high=mean + z * stderr,
        samples=samples,
        seed=seed,
    )


def _injective_density(
    indicators: List[np.ndarray],
    n: int,
    mode: str,
    samples: int,
    seed: int,
    budget: Optional[int],
    cutoff: int,
    n_jobs: int,
    scan: str,
) -> Estimate:
    m = len(indicators)
    if m > (1 << n):
        raise PreconditionError(f"cannot place {m} distinct points in F_2^{n}")
    if m == 0:
        return Estimate(Fraction(1), "exact")
    if _choose_exact(mode, m, n, budget, cutoff, scan):
        total = injective_product_sum(indicators)
        return Estimate(Fraction(total, falling_factorial(1 << n, m)), "exact")
    return monte_carlo_injective_mean(indicators, n, samples=samples, seed=seed, n_jobs=n_jobs)


def right_indicators(G: BipartitePattern, psi: InjectionMap, f: BooleanFunction) -> List[np.ndarray]:
    """Per right vertex r: I_r(c) = prod over left neighbours u of [psi(u) ~ c]."""
    out = []
    for r in G.right:
        vec = np.ones(f.size, dtype=np.int64)
        for u in G.neighbors(r):
            vec *= neighborhood_indicator(f, psi[u])
        out.append(vec)
    return out


def bhom_fixed_left(
    G: BipartitePattern,
    psi: InjectionMap,
    f: BooleanFunction,
    mode: str = "auto",
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = DEFAULT_SEED,
    budget: Optional[int] = DEFAULT_BUDGET,
    cutoff: int = EXACT_INJECTION_CUTOFF,
    n_jobs: int = 1,
) -> Estimate:
    """
    Normalized count of injective homomorphisms of G into BC(f) extending psi.

    Args:
        G: Bipartite pattern
        psi: Injection of the left vertices
        f: Function defining BC(f)
        mode: auto | exact | montecarlo
        samples: Monte Carlo sample count
        seed: Monte Carlo seed
        budget: Cap on the exact partition sum
        cutoff: Largest injection count that auto mode enumerates exactly
        n_jobs: joblib workers for Monte Carlo batches

    Returns:
        Estimate: E over injective phi of prod over edges (u,r) of [psi(u) ~ phi(r)]

    Raises:
        PreconditionError: If psi does not cover the left part or dimensions differ
        BudgetExceededError: If exact mode is forced beyond the budget
    """
    if psi.n != f.n:
        raise PreconditionError("injection and function dimensions differ")
    if not psi.covers(G.left):
        raise PreconditionError("left injection must cover every left vertex")
    indicators = right_indicators(G, psi, f)
    return _injective_density(
        indicators, f.n, mode, samples, seed, budget, cutoff, n_jobs, "bhom_fixed_left"
    )


def edge_indicators(G: SimplePattern, phi: InjectionMap, f: BooleanFunction) -> List[np.ndarray]:
    """Per edge (u,v): J(x) = [f(phi(u) + x) = f(phi(v) + x)]."""
    return [rhg_color_indicator(f, phi[u], phi[v]) for u, v in G.edges]


def rainbow_embedding_density(
    G: SimplePattern,
    phi: InjectionMap,
    f: BooleanFunction,
    d: Optional[int] = None,
    mode: str = "auto",
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = DEFAULT_SEED,
    budget: Optional[int] = DEFAULT_BUDGET,
    cutoff: int = EXACT_INJECTION_CUTOFF,
    n_jobs: int = 1,
    injective_colors: bool = True,
) -> Estimate:
    """
    Fraction of edge colourings of G that are rainbow embeddings into RHG(d, f) under phi.

    With injective_colors=False colours may repeat, and the density is the
    product of the per-edge colour fractions.

    Raises:
        PreconditionError: If phi leaves the radius-d ball, has diameter above d,
            or does not cover V(G)
    """
    if phi.n != f.n:
        raise PreconditionError("injection and function dimensions differ")
    if not phi.covers(G.vertices):
        raise PreconditionError("vertex injection must cover every vertex")
    if d is not None:
        for point in phi.image:
            if popcount(point) > d:
                raise PreconditionError(f"point {point:#x} lies outside the radius-{d} ball")
        if phi.diameter > d:
            raise PreconditionError(f"injection diameter {phi.diameter} exceeds {d}")
    indicators = edge_indicators(G, phi, f)
    if not injective_colors:
        num = 1
        for vec in indicators:
            num *= int(vec.sum())
        return Estimate(Fraction(num, 1 << (f.n * len(indicators))), "exact")
    return _injective_density(
        indicators, f.n, mode, samples, seed, budget, cutoff, n_jobs, "rainbow_embedding_density"
    )


