"""
Adjacency oracles for the bipartite Cayley graph BC(f) and the rainbow
Hamming graph RHG(k, f). Neither graph is ever built; everything is read off f.
"""

from fractions import Fraction

import numpy as np

from core.boolean_function import BooleanFunction
from core.errors import PreconditionError
from core.spectrum import autocorrelation, walsh_transform


def _check_point(f: BooleanFunction, x: int, name: str) -> None:
    if not 0 <= x < f.size:
        raise PreconditionError(f"{name}={x} outside F_2^{f.n}")


def bc_adjacent(f: BooleanFunction, u: int, v: int) -> bool:
    """u ~ v in BC(f) iff f(u + v) = -1. Symmetric in u and v."""
    _check_point(f, u, "u")
    _check_point(f, v, "v")
    return bool(f.table[u ^ v] < 0)


def bc_edge_count(f: BooleanFunction) -> int:
    """Edges of BC(f): each of the 2^n left vertices meets every -1 shift."""
    return f.size * f.count_negative()


def neighborhood_indicator(f: BooleanFunction, u: int) -> np.ndarray:
    """0/1 vector over c in F_2^n marking the right neighbours of the left vertex u."""
    _check_point(f, u, "u")
    points = np.arange(f.size, dtype=np.int64)
    return (f.table[points ^ u] < 0).astype(np.int64)


def codegree(f: BooleanFunction, u: int, v: int) -> int:
    """
    Common neighbours of u and v in BC(f), from the spectrum.

    codegree = (2^n - 2 W(0) + A(u + v)) / 4, which depends only on u + v.
    """
    _check_point(f, u, "u")
    _check_point(f, v, "v")
    w0 = int(walsh_transform(f).W[0])
    a = autocorrelation(f).value(u ^ v)
    total = f.size - 2 * w0 + a
    return total // 4


def codegree_direct(f: BooleanFunction, u: int, v: int) -> int:
    """Common neighbours by direct count over all right vertices."""
    return int(np.dot(neighborhood_indicator(f, u), neighborhood_indicator(f, v)))


def codegree_target(f: BooleanFunction) -> Fraction:
    """p = 1/4 - f^(0)/2, the codegree density of a quasi-random f."""
    return Fraction(1, 4) - walsh_transform(f).mean() / 2


def degree_target(f: BooleanFunction) -> Fraction:
    """q = 1/2 - f^(0)/2, the edge density of BC(f)."""
    return Fraction(1, 2) - walsh_transform(f).mean() / 2


def rhg_edge(f: BooleanFunction, u: int, v: int, x: int) -> bool:
    """
    (u, v, x) is an edge of RHG(k, f) iff f(u + x) = f(v + x).

    Raises:
        PreconditionError: If u == v (loops are excluded)
    """
    _check_point(f, u, "u")
    _check_point(f, v, "v")
    _check_point(f, x, "x")
    if u == v:
        raise PreconditionError("rainbow Hamming graph edges need distinct endpoints")
    return bool(f.table[u ^ x] == f.table[v ^ x])


def rhg_color_indicator(f: BooleanFunction, u: int, v: int) -> np.ndarray:
    """0/1 vector over colours x marking the edges (u, v, x)."""
    _check_point(f, u, "u")
    _check_point(f, v, "v")
    if u == v:
        raise PreconditionError("rainbow Hamming graph edges need distinct endpoints")
    points = np.arange(f.size, dtype=np.int64)
    return (f.table[points ^ u] == f.table[points ^ v]).astype(np.int64)
