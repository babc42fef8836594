"""
Bit helpers for points of F_2^n.

Coordinate i (1-based) of a point is integer bit i-1, and the inner product
gamma . x is popcount(gamma & x) mod 2.
"""

from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Tuple

import numpy as np
from scipy.special import comb


def popcount(x: int) -> int:
    """Hamming weight of a non-negative integer."""
    return bin(x).count("1")


def parity(x: int) -> int:
    return popcount(x) & 1


@lru_cache(maxsize=32)
def weights(n: int) -> np.ndarray:
    """
    Hamming weights of every point of F_2^n.

    Returns:
        np.ndarray: Read-only int8 array of length 2^n
    """
    points = np.arange(1 << n, dtype=np.int64)
    w = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        w += ((points >> i) & 1).astype(np.int8)
    w.setflags(write=False)
    return w


def popcount_array(values: np.ndarray, n: int) -> np.ndarray:
    """Weights of an array of points, each below 2^n."""
    return weights(n)[values]


def coordinates(x: int, n: int) -> Tuple[int, ...]:
    """Coordinates (x_1, ..., x_n) of a point."""
    return tuple((x >> i) & 1 for i in range(n))


def from_coordinates(bits) -> int:
    return sum(int(b) << i for i, b in enumerate(bits))


def support(mask: int) -> List[int]:
    """Bit positions set in mask, ascending."""
    out = []
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def spread(mask: int) -> np.ndarray:
    """
    Embedding table for the free coordinates in mask.

    Entry j is the point whose bits on mask (ascending) are the bits of j and
    which is zero elsewhere.

    Returns:
        np.ndarray: int64 array of length 2^popcount(mask)
    """
    positions = support(mask)
    compact = np.arange(1 << len(positions), dtype=np.int64)
    out = np.zeros(1 << len(positions), dtype=np.int64)
    for j, p in enumerate(positions):
        out |= ((compact >> j) & 1) << p
    return out


def deposit(compact: int, mask: int) -> int:
    """Scalar version of spread: place the low bits of compact onto mask."""
    out = 0
    for j, p in enumerate(support(mask)):
        if (compact >> j) & 1:
            out |= 1 << p
    return out


def extract(x: int, mask: int) -> int:
    """Inverse of deposit: gather the bits of x on mask into low bits."""
    out = 0
    for j, p in enumerate(support(mask)):
        if (x >> p) & 1:
            out |= 1 << j
    return out


def masks_of_weight(n: int, k: int) -> Iterator[int]:
    """Subsets of [n] of size k as bitmasks, in lexicographic order of positions."""
    for combo in combinations(range(n), k):
        mask = 0
        for p in combo:
            mask |= 1 << p
        yield mask


def hamming_ball(n: int, d: int, include_zero: bool = True) -> np.ndarray:
    """
    Points of weight at most d in ascending integer order.

    Args:
        n: Dimension
        d: Radius
        include_zero: Keep the origin

    Returns:
        np.ndarray: int64 array of points
    """
    w = weights(n)
    keep = w <= d
    if not include_zero:
        keep = keep & (w > 0)
    return np.flatnonzero(keep).astype(np.int64)


def hamming_ball_size(n: int, d: int) -> int:
    return int(sum(comb(n, k, exact=True) for k in range(0, min(n, d) + 1)))


def diameter(points) -> int:
    """Largest pairwise Hamming distance of a point set (0 for fewer than two points)."""
    pts = list(points)
    best = 0
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            best = max(best, popcount(pts[i] ^ pts[j]))
    return best
