"""
Walsh spectrum, autocorrelation and influences.

All tables are scaled integers: W(gamma) = sum_x f(x)(-1)^(gamma . x) and
A(gamma) = sum_x f(x) f(x + gamma). Rationals appear only at the API boundary
as fractions.Fraction with power-of-two denominators.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

import numpy as np

from .bits import extract, full_mask, popcount, spread, weights
from .boolean_function import BooleanFunction
from .constants import MAX_DIRECT_ORACLE_N
from .errors import PreconditionError, VerificationError
from .subcube import Subcube, restrict

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Exact Walsh coefficients W; the Fourier coefficient is W(gamma) / 2^n."""

    n: int
    W: np.ndarray

    def coefficient(self, gamma: int) -> Fraction:
        return Fraction(int(self.W[gamma]), 1 << self.n)

    def squares(self) -> np.ndarray:
        """W(gamma)^2 as int64 (bounded by 2^(2n))."""
        return self.W * self.W

    def parseval_total(self) -> int:
        return int(self.squares().sum())

    def mean(self) -> Fraction:
        """The zeroth coefficient, E f."""
        return self.coefficient(0)


@dataclass(frozen=True, eq=False)
class AutocorrelationTable:
    """A(gamma) = 2^n (f*f)(gamma)."""

    n: int
    A: np.ndarray

    def value(self, gamma: int) -> int:
        return int(self.A[gamma])

    def normalized(self, gamma: int) -> Fraction:
        """(f*f)(gamma) as an exact rational."""
        return Fraction(int(self.A[gamma]), 1 << self.n)


def fwht(values: np.ndarray) -> np.ndarray:
    """
    Unnormalized Walsh-Hadamard butterfly along the last axis.

    Works on int64 copies, so a call never mutates its input. Leading axes are
    treated as a batch. Applying it twice multiplies by the length.

    Args:
        values: Array whose last axis has power-of-two length

    Returns:
        np.ndarray: Transformed int64 array of the same shape
    """
    a = np.array(values, dtype=np.int64, copy=True)
    shape = a.shape
    size = shape[-1]
    if size & (size - 1):
        raise PreconditionError(f"transform length {size} is not a power of two")
    batch = shape[:-1]
    h = 1
    while h < size:
        a = a.reshape(*batch, size // (2 * h), 2, h)
        lo = a[..., 0, :].copy()
        hi = a[..., 1, :].copy()
        a[..., 0, :] = lo + hi
        a[..., 1, :] = lo - hi
        h *= 2
    return a.reshape(shape)


def walsh_transform(f: BooleanFunction) -> Spectrum:
    """
    Exact integer Walsh spectrum of f in O(n 2^n) additions.

    Returns:
        Spectrum: W with W(gamma) = sum_x f(x)(-1)^(gamma . x)
    """
    def _compute() -> Spectrum:
        w = fwht(f.table)
        w.setflags(write=False)
        return Spectrum(f.n, w)

    return f.cached("spectrum", _compute)


def autocorrelation(f: BooleanFunction) -> AutocorrelationTable:
    """
    Autocorrelation table through the convolution theorem.

    The transform of W^2 equals 2^n A, so A is recovered by an exact shift.
    Intermediate magnitudes stay below 2^(2n), inside int64 for every
    supported dimension.
    """
    def _compute() -> AutocorrelationTable:
        spec = walsh_transform(f)
        scaled = fwht(spec.squares())
        a = scaled >> f.n
        if np.any((a << f.n) != scaled):
            raise VerificationError("autocorrelation transform is not divisible by 2^n")
        a.setflags(write=False)
        return AutocorrelationTable(f.n, a)

    return f.cached("autocorrelation", _compute)


def autocorrelation_direct(f: BooleanFunction) -> AutocorrelationTable:
    """Quadratic-time oracle: A(gamma) = sum_x f(x) f(x + gamma) by direct summation."""
    if f.n > MAX_DIRECT_ORACLE_N:
        raise PreconditionError(
            f"direct autocorrelation is limited to n <= {MAX_DIRECT_ORACLE_N}"
        )
    t = f.table.astype(np.int64)
    points = np.arange(f.size, dtype=np.int64)
    a = np.array([int(np.dot(t, t[points ^ g])) for g in range(f.size)], dtype=np.int64)
    return AutocorrelationTable(f.n, a)


def convolve(g: BooleanFunction, h: BooleanFunction) -> np.ndarray:
    """
    Scaled convolution 2^n (g*h)(x) = sum_y g(x + y) h(y), exact integers.

    The autocorrelation is the case g = h.
    """
    if g.n != h.n:
        raise PreconditionError("convolution needs functions of equal dimension")
    product = walsh_transform(g).W * walsh_transform(h).W
    return fwht(product) >> g.n


def fourier_coefficient(spec: Spectrum, gamma: int) -> Fraction:
    if not 0 <= gamma < (1 << spec.n):
        raise PreconditionError(f"character index {gamma} outside F_2^{spec.n}")
    return spec.coefficient(gamma)


def influence(f: BooleanFunction, gamma: int) -> Fraction:
    """
    Pr_x[f(x) != f(x + gamma)] = (2^n - A(gamma)) / 2^(n+1).

    Raises:
        PreconditionError: If gamma is not a point of F_2^n
    """
    if not 0 <= gamma < f.size:
        raise PreconditionError(f"shift {gamma} outside F_2^{f.n}")
    a = autocorrelation(f).value(gamma)
    return Fraction(f.size - a, 2 * f.size)


def spectral_mass(spec: Spectrum, c: Subcube) -> Fraction:
    """Weight of the spectral sample on the subcube: sum over C(S,z) of W^2 / 2^(2n)."""
    if c.n != spec.n:
        raise PreconditionError("subcube and spectrum dimensions differ")
    total = int(spec.squares()[c.points()].sum())
    return Fraction(total, 1 << (2 * spec.n))


def subcube_masses(spec: Spectrum, fixed: int) -> np.ndarray:
    """
    Scaled spectral masses of all subcubes pinning the coordinates in fixed.

    Entry j is the sum of W^2 over the subcube whose assignment on fixed
    (ascending coordinates) is the bits of j.
    """
    n = spec.n
    cube = spec.squares().reshape((2,) * n) if n else spec.squares()
    # axis a of the reshaped cube is bit n-1-a
    free_axes = tuple(n - 1 - b for b in range(n) if not (fixed >> b) & 1)
    reduced = cube.sum(axis=free_axes) if free_axes else cube
    return np.asarray(reduced, dtype=np.int64).reshape(-1)


def restricted_fourier_identity(f: BooleanFunction, c: Subcube, gamma: int) -> Fraction:
    """
    Fourier coefficient of f|_{S,z} from the coefficients of f.

    f|^(gamma) = sum over delta supported off S of f^(gamma + delta) chi_delta(z).

    Args:
        f: Function on F_2^n
        c: Subcube C(S, z)
        gamma: Character supported on S, as an n-bit mask

    Returns:
        Fraction: The coefficient of the restriction at the compacted gamma
    """
    if gamma & ~c.S:
        raise PreconditionError("gamma must be supported on the free set S")
    spec = walsh_transform(f)
    deltas = spread(c.fixed)
    signs = 1 - 2 * (weights(f.n)[deltas & c.z].astype(np.int64) & 1)
    total = int(np.dot(spec.W[deltas | gamma], signs))
    return Fraction(total, f.size)


def restricted_coefficient_direct(f: BooleanFunction, c: Subcube, gamma: int) -> Fraction:
    """The same coefficient from the transform of the restricted table."""
    if gamma & ~c.S:
        raise PreconditionError("gamma must be supported on the free set S")
    if c.dimension == 0:
        return Fraction(int(f.table[c.z]))
    sub = restrict(f, c)
    return walsh_transform(sub).coefficient(extract(gamma, c.S))


def restricted_mean_square(f: BooleanFunction, S: int, gamma: int) -> Fraction:
    """
    E over z on the complement of S of f|_{S,z}^(gamma)^2, by explicit restriction.

    Oracle side of the spectral-mass identity, whose closed form is the
    spectral mass of C(complement of S, gamma).
    """
    n = f.n
    fixed = full_mask(n) & ~S
    if gamma & ~S:
        raise PreconditionError("gamma must be supported on S")
    total = Fraction(0)
    count = 1 << popcount(fixed)
    for z in spread(fixed):
        coeff = restricted_coefficient_direct(f, Subcube(n, S, int(z)), gamma)
        total += coeff * coeff
    return total / count


def degree_weight_profile(spec: Spectrum) -> List[Fraction]:
    """Spectral-sample mass on each weight level 0..n."""
    w = weights(spec.n)
    sq = spec.squares()
    denom = 1 << (2 * spec.n)
    return [Fraction(int(sq[w == k].sum()), denom) for k in range(spec.n + 1)]
