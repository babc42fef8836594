"""
Gowers Uniformity Norms
U^k norms by the derivative recursion, with a sampled variant and the
definitional Monte Carlo estimator used to cross-check it
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_BUDGET, DEFAULT_MC_SAMPLES, DEFAULT_SEED
from core.errors import PreconditionError, VerificationError, check_budget
from core.spectrum import fwht

logger = logging.getLogger(__name__)

GOWERS_MODES = ("exact", "sampled")

# derivative tables materialized per chunk
_CHUNK_ENTRIES = 1 << 20

# rounding slack allowed above 1 before a norm is rejected
_NORM_SLACK = 1e-12


@dataclass(frozen=True)
class GowersResult:
    """
    ||f||_{U^k}.

    Attributes:
        k: Norm order
        value: Norm in [0, 1]
        method: exact-recursive | sampled
        stderr: Standard error of the sampled 2^k-th power
        samples: Number of sampled derivative directions
    """

    k: int
    value: float
    method: str
    stderr: Optional[float] = None
    samples: Optional[int] = None

    def as_dict(self) -> dict:
        out = {"k": self.k, "value": self.value, "method": self.method}
        if self.method == "sampled":
            out.update(stderr=self.stderr, samples=self.samples)
        return out


def gowers_cost(n: int, k: int) -> int:
    """Elementary operations of the exact recursion: 2^n at U^1, n 2^(n(k-1)) above."""
    if k == 1:
        return 1 << n
    return n * (1 << (n * (k - 1)))


def _powers(tables: np.ndarray, k: int) -> np.ndarray:
    """||row||_{U^k}^(2^k) for each row of a batch of +-1 tables."""
    size = tables.shape[-1]
    if k == 1:
        means = tables.sum(axis=-1, dtype=np.int64) / size
        return means * means
    if k == 2:
        coeffs = fwht(tables) / size
        return (coeffs ** 4).sum(axis=-1)
    points = np.arange(size, dtype=np.int64)
    chunk = max(1, _CHUNK_ENTRIES // size)
    out = np.empty(tables.shape[0], dtype=np.float64)
    for b, row in enumerate(tables):
        total = 0.0
        for start in range(0, size, chunk):
            shifts = points[start:start + chunk]
            derivs = row[None, :] * row[points[None, :] ^ shifts[:, None]]
            total += float(_powers(derivs, k - 1).sum())
        out[b] = total / size
    return out


def _bounded(value: float, k: int, n: int) -> float:
    """Clamp rounding noise above 1; larger overshoots raise."""
    if value > 1.0 + _NORM_SLACK:
        raise VerificationError(f"U^{k} norm {value!r} exceeds 1 on n={n}", {"k": k, "n": n, "value": value})
    return min(value, 1.0)


def gowers_norm(
    f: BooleanFunction,
    k: int,
    mode: str = "exact",
    samples: int = DEFAULT_MC_SAMPLES,
    seed: int = DEFAULT_SEED,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> GowersResult:
    """
    ||f||_{U^k} from ||f||^(2^k) = E_v ||D_v f||_{U^(k-1)}^(2^(k-1)), D_v f(x) = f(x) f(x + v).

    U^1 is |E f| and U^2 is (sum f^(gamma)^4)^(1/4); higher orders recurse.

    Args:
        f: Function on F_2^n
        k: Order, k >= 1
        mode: exact | sampled (sampled draws derivative directions v)
        samples: Directions drawn in sampled mode
        seed: Seed for sampled mode
        budget: Operation cap for exact mode

    Raises:
        BudgetExceededError: If the exact recursion is over budget
    """
    if k < 1:
        raise PreconditionError("Gowers norm order must be at least 1")
    if mode not in GOWERS_MODES:
        raise PreconditionError(f"unknown Gowers mode {mode!r}; expected one of {GOWERS_MODES}")
    table = f.table.astype(np.int64)[None, :]

    if mode == "exact" or k <= 2:
        check_budget(f"gowers_norm(U^{k})", gowers_cost(f.n, k), budget)
        power = float(_powers(table, k)[0])
        value = max(power, 0.0) ** (1.0 / (1 << k))
        logger.debug(f"U^{k} on n={f.n}: {value:.12f}")
        return GowersResult(k=k, value=_bounded(value, k, f.n), method="exact-recursive")

    if samples < 2:
        raise PreconditionError("sampled Gowers norm needs at least two directions")
    check_budget(f"gowers_norm(U^{k}, sampled)", samples * gowers_cost(f.n, k - 1), budget)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed])))
    shifts = rng.integers(0, f.size, size=samples, dtype=np.int64)
    points = np.arange(f.size, dtype=np.int64)
    row = table[0]
    values = np.empty(samples, dtype=np.float64)
    chunk = max(1, _CHUNK_ENTRIES // f.size)
    for start in range(0, samples, chunk):
        v = shifts[start:start + chunk]
        derivs = row[None, :] * row[points[None, :] ^ v[:, None]]
        values[start:start + chunk] = _powers(derivs, k - 1)
    power = float(values.mean())
    stderr = float(values.std(ddof=1) / math.sqrt(samples))
    value = max(power, 0.0) ** (1.0 / (1 << k))
    return GowersResult(k=k, value=_bounded(value, k, f.n), method="sampled", stderr=stderr, samples=samples)


def gowers_power_sampled_definition(
    f: BooleanFunction, k: int, samples: int = DEFAULT_MC_SAMPLES, seed: int = DEFAULT_SEED
) -> Tuple[float, float]:
    """
    Monte Carlo estimate of ||f||_{U^k}^(2^k) straight from the definition.

    Draws x, h_1..h_k and averages prod over S subset [k] of f(x + sum_{i in S} h_i).

    Returns:
        Tuple of (mean, standard error)
    """
    if k < 1 or samples < 2:
        raise PreconditionError("need k >= 1 and at least two samples")
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, k])))
    draws = rng.integers(0, f.size, size=(samples, k + 1), dtype=np.int64)
    x, h = draws[:, 0], draws[:, 1:]
    prod = np.ones(samples, dtype=np.int64)
    for subset in range(1 << k):
        point = x.copy()
        for i in range(k):
            if subset >> i & 1:
                point ^= h[:, i]
        prod *= f.table[point]
    return float(prod.mean()), float(prod.std(ddof=1) / math.sqrt(samples))


def f2_regular_error(
    f: BooleanFunction, d: int, budget: Optional[int] = DEFAULT_BUDGET
) -> float:
    """||f||_{U^(d+1)}: the error bound at which f is F_2-regular of degree d."""
    if d < 0:
        raise PreconditionError("degree must be non-negative")
    return gowers_norm(f, d + 1, budget=budget).value
