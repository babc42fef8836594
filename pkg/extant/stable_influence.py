"""
Stable Influences
rho-stable coordinate influences sum_{gamma_i = 1} rho^(|gamma|-1) f^(gamma)^2
"""

from typing import Iterable, Tuple

import numpy as np
import pandas as pd

from core.bits import weights
from core.boolean_function import BooleanFunction
from core.constants import DEFAULT_RHO_GRID
from core.errors import PreconditionError
from core.spectrum import walsh_transform


def _check_rho(rho: float) -> None:
    if not 0.0 <= rho <= 1.0:
        raise PreconditionError(f"rho={rho} outside [0, 1]")


def _coordinate_weight_masses(f: BooleanFunction) -> np.ndarray:
    """masses[i, w]: spectral mass on gamma with gamma_{i+1} = 1 and |gamma| = w (exact ints)."""
    sq = walsh_transform(f).squares()
    w = weights(f.n)
    points = np.arange(f.size, dtype=np.int64)
    out = np.zeros((f.n, f.n + 1), dtype=np.int64)
    for i in range(f.n):
        on = ((points >> i) & 1).astype(bool)
        np.add.at(out[i], w[on].astype(np.int64), sq[on])
    return out


def _stable_all(f: BooleanFunction, rho: float) -> np.ndarray:
    _check_rho(rho)
    masses = _coordinate_weight_masses(f).astype(np.float64) / float(1 << (2 * f.n))
    damping = np.array([rho ** (w - 1) if w >= 1 else 0.0 for w in range(f.n + 1)])
    return masses @ damping


def stable_influence(f: BooleanFunction, i: int, rho: float) -> float:
    """
    Inf_i^rho[f] for coordinate i (1-based).

    Raises:
        PreconditionError: If i is not a coordinate or rho is outside [0, 1]
    """
    if not 1 <= i <= f.n:
        raise PreconditionError(f"coordinate {i} outside [1, {f.n}]")
    return float(_stable_all(f, rho)[i - 1])


def max_stable_influence(f: BooleanFunction, rho: float) -> Tuple[float, int]:
    """Largest rho-stable influence and its (smallest) coordinate."""
    values = _stable_all(f, rho)
    i = int(np.argmax(values))
    return float(values[i]), i + 1


def stable_influence_profile(f: BooleanFunction, rhos: Iterable[float] = DEFAULT_RHO_GRID) -> pd.DataFrame:
    """Per rho: the largest stable influence, its coordinate and the total over coordinates."""
    rows = []
    for rho in rhos:
        values = _stable_all(f, rho)
        i = int(np.argmax(values))
        rows.append({"rho": rho, "max_influence": float(values[i]), "coordinate": i + 1, "total": float(values.sum())})
    return pd.DataFrame(rows, columns=["rho", "max_influence", "coordinate", "total"])
