"""
Binary linear codes given by parity-check rows.

Rows are n-bit masks whose bit j is the entry in column j (coordinate j+1).
A code of length n and dimension k is the kernel of its n-k independent rows.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from core.bits import full_mask, popcount, popcount_array
from core.constants import MAX_EXACT_N, MAX_KERNEL_DIM
from core.errors import PreconditionError

logger = logging.getLogger(__name__)

# An [8,4,4] extended Hamming parity-check matrix in a fixed column order;
# character j of each string is column j.
EXAMPLE_EXTENDED_HAMMING_ROWS = ("01111000", "10110100", "11010010", "11100001")


def rref_bitrows(rows: Sequence[int], ncols: int) -> Tuple[List[int], List[int]]:
    """
    Reduced row echelon form over GF(2).

    Returns:
        Tuple of (nonzero rows in pivot order, pivot columns)
    """
    mat = [int(r) for r in rows]
    m = len(mat)
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        bit = 1 << c
        pivot_row = next((i for i in range(r, m) if mat[i] & bit), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pivots.append(c)
        for i in range(m):
            if i != r and mat[i] & bit:
                mat[i] ^= mat[r]
        r += 1
    return mat[:r], pivots


def nullspace_basis(rows: Sequence[int], ncols: int) -> List[int]:
    """Basis of {x : parity(row & x) = 0 for every row}, one vector per free column."""
    reduced, pivots = rref_bitrows(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, pcol in zip(reduced, pivots):
            if row >> free & 1:
                v |= 1 << pcol
        basis.append(v)
    return basis


@dataclass(frozen=True)
class LinearCode:
    """
    [n, k] binary linear code held by its parity-check matrix H.

    Attributes:
        n: Code length
        k: Code dimension
        rows: The n-k rows of H as n-bit masks
    """

    n: int
    k: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if not 1 <= self.n <= MAX_EXACT_N:
            raise PreconditionError(f"code length {self.n} outside [1, {MAX_EXACT_N}]")
        if not 0 <= self.k <= self.n:
            raise PreconditionError(f"code dimension {self.k} outside [0, {self.n}]")
        if len(self.rows) != self.n - self.k:
            raise PreconditionError(f"expected {self.n - self.k} parity-check rows, got {len(self.rows)}")
        for row in self.rows:
            if row < 0 or row & ~full_mask(self.n):
                raise PreconditionError(f"parity-check row {row:#x} wider than n={self.n}")
        rank = len(rref_bitrows(self.rows, self.n)[0])
        if rank != self.n - self.k:
            raise PreconditionError(f"parity-check matrix has rank {rank}, expected {self.n - self.k}")

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "LinearCode":
        """Code from equal-width binary strings; character j is column j."""
        if not rows:
            raise PreconditionError("no parity-check rows given; use LinearCode.full_space")
        n = len(rows[0])
        masks = []
        for text in rows:
            if len(text) != n or set(text) - {"0", "1"}:
                raise PreconditionError(f"bad parity-check row {text!r}")
            masks.append(sum(1 << j for j, ch in enumerate(text) if ch == "1"))
        return cls(n, n - len(rows), tuple(masks))

    @classmethod
    def full_space(cls, n: int) -> "LinearCode":
        """k = n: no checks, every vector is a codeword."""
        return cls(n, n, ())

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def syndrome(self, x: int) -> int:
        """Hx as an (n-k)-bit integer, bit i from row i."""
        return sum((popcount(row & x) & 1) << i for i, row in enumerate(self.rows))

    def syndromes(self) -> np.ndarray:
        """Hx for every x in F_2^n."""
        points = np.arange(1 << self.n, dtype=np.int64)
        out = np.zeros(1 << self.n, dtype=np.int64)
        for i, row in enumerate(self.rows):
            out |= (popcount_array(points & row, self.n).astype(np.int64) & 1) << i
        return out

    def is_codeword(self, x: int) -> bool:
        return self.syndrome(x) == 0

    def to_strings(self) -> List[str]:
        return ["".join("1" if row >> j & 1 else "0" for j in range(self.n)) for row in self.rows]

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "rows": self.to_strings()}


def generator_basis(code: LinearCode) -> List[int]:
    """k codewords spanning the code."""
    return nullspace_basis(code.rows, code.n)


def hamming_parity_check(r: int) -> LinearCode:
    """
    [2^r - 1, 2^r - 1 - r, 3] Hamming code: column j is the binary expansion of j + 1.
    """
    if r < 2:
        raise PreconditionError("Hamming codes need redundancy r >= 2")
    n = (1 << r) - 1
    rows = tuple(sum(1 << j for j in range(n) if (j + 1) >> i & 1) for i in range(r))
    return LinearCode(n, n - r, rows)


def extended_hamming(r: int) -> LinearCode:
    """[2^r, 2^r - 1 - r, 4]: the Hamming checks padded with a zero column plus an all-ones row."""
    base = hamming_parity_check(r)
    n = base.n + 1
    return LinearCode(n, base.k, base.rows + (full_mask(n),))


def example_extended_hamming() -> LinearCode:
    return LinearCode.from_strings(EXAMPLE_EXTENDED_HAMMING_ROWS)


def identity_code(n: int) -> LinearCode:
    """H = I_n, k = 0: only the zero codeword."""
    return LinearCode(n, 0, tuple(1 << i for i in range(n)))


def _gray_codewords(basis: Sequence[int]):
    """Nonzero codewords, one basis toggle per step."""
    word = 0
    for t in range(1, 1 << len(basis)):
        diff = t ^ (t >> 1) ^ (t - 1) ^ ((t - 1) >> 1)
        word ^= basis[diff.bit_length() - 1]
        yield word


def _check_enumerable(code: LinearCode) -> List[int]:
    if code.k > MAX_KERNEL_DIM:
        raise PreconditionError(f"codeword enumeration refused: k={code.k} > {MAX_KERNEL_DIM}")
    return generator_basis(code)


def min_kernel_weight(code: LinearCode) -> Tuple[int, int]:
    """
    Minimum weight over nonzero codewords, by Gray-code enumeration of all 2^k.

    Returns:
        Tuple of (weight, a codeword achieving it; the smallest such integer)

    Raises:
        PreconditionError: If k = 0 or k exceeds the enumeration cap
    """
    if code.k == 0:
        raise PreconditionError("code has no nonzero codeword")
    basis = _check_enumerable(code)
    best_w, best_x = code.n + 1, 0
    for word in _gray_codewords(basis):
        w = popcount(word)
        if w < best_w or (w == best_w and word < best_x):
            best_w, best_x = w, word
    logger.debug(f"min kernel weight of [{code.n},{code.k}] code: {best_w}")
    return best_w, best_x


def weight_distribution(code: LinearCode) -> Dict[int, int]:
    """Number of codewords of each weight, zero word included."""
    basis = _check_enumerable(code)
    counts: Dict[int, int] = {0: 1}
    for word in _gray_codewords(basis):
        w = popcount(word)
        counts[w] = counts.get(w, 0) + 1
    return dict(sorted(counts.items()))
