"""
Subcubes and restrictions.

A subcube C(S, z) is the set of points agreeing with z outside the free
coordinate set S. Restricting f to it yields a function on |S| bits whose
coordinates are the free coordinates of S in ascending order.
"""

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .bits import deposit, full_mask, masks_of_weight, popcount, spread
from .boolean_function import BooleanFunction
from .errors import PreconditionError


@dataclass(frozen=True)
class Subcube:
    """Free coordinate mask S plus a fixed assignment z on the complement of S."""

    n: int
    S: int
    z: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("subcube dimension must be non-negative")
        limit = full_mask(self.n)
        if self.S & ~limit or self.z & ~limit:
            raise PreconditionError(f"subcube masks exceed F_2^{self.n}")
        if self.z & self.S:
            raise PreconditionError("fixed assignment z must vanish on the free set S")

    @classmethod
    def full(cls, n: int) -> "Subcube":
        return cls(n, full_mask(n), 0)

    @classmethod
    def point(cls, n: int, z: int) -> "Subcube":
        return cls(n, 0, z)

    @property
    def dimension(self) -> int:
        return popcount(self.S)

    @property
    def codimension(self) -> int:
        return self.n - self.dimension

    @property
    def fixed(self) -> int:
        """Mask of the pinned coordinates."""
        return full_mask(self.n) & ~self.S

    def points(self) -> np.ndarray:
        """Every point x (tensor) z, ascending in the compact free index."""
        return spread(self.S) | self.z

    def embed(self, x: int) -> int:
        """x (tensor)_S z for x given in the compact coordinates of S."""
        if not 0 <= x < (1 << self.dimension):
            raise PreconditionError(f"point {x} outside F_2^{self.dimension}")
        return deposit(x, self.S) | self.z

    def contains(self, x: int) -> bool:
        return (x & self.fixed) == self.z

    def as_dict(self) -> dict:
        return {"n": self.n, "S": self.S, "z": self.z, "dimension": self.dimension}


def restrict(f: BooleanFunction, c: Subcube) -> BooleanFunction:
    """
    Restriction f|_{S,z}.

    Args:
        f: Function on F_2^n
        c: Subcube in the same dimension

    Returns:
        BooleanFunction: Table on popcount(S) bits with f|(x) = f(x (tensor)_S z).
        An empty S yields the constant f(z) as a one-bit function, since the
        table type needs at least one coordinate.
    """
    if c.n != f.n:
        raise PreconditionError(f"subcube lives in F_2^{c.n}, function in F_2^{f.n}")
    values = f.table[c.points()]
    if c.dimension == 0:
        return BooleanFunction.constant(1, int(values[0]))
    return BooleanFunction(values, c.dimension)


def restriction_tables(f: BooleanFunction, S: int) -> np.ndarray:
    """
    Tables of every restriction f|_{S,z} stacked as rows.

    Row j is restrict(f, c).table for the j-th subcube c of
    subcubes_with_fixed(n, complement of S).

    Raises:
        PreconditionError: If S is empty or leaves F_2^n
    """
    if not 0 < S <= full_mask(f.n):
        raise PreconditionError(f"free set {S} is not a nonempty subset of the {f.n} coordinates")
    fixed = full_mask(f.n) & ~S
    return f.table[spread(fixed)[:, None] | spread(S)[None, :]]


def subcubes_with_fixed(n: int, fixed: int) -> Iterator[Subcube]:
    """All 2^|fixed| subcubes pinning exactly the coordinates in fixed."""
    free = full_mask(n) & ~fixed
    for j in range(1 << popcount(fixed)):
        yield Subcube(n, free, deposit(j, fixed))


def subcubes_of_codimension(n: int, k: int) -> Iterator[Subcube]:
    """Every subcube of codimension k, grouped by fixed set."""
    for fixed in masks_of_weight(n, k):
        yield from subcubes_with_fixed(n, fixed)
