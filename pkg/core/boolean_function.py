"""
Boolean Function
Immutable truth table of a map F_2^n -> {+1, -1}
"""

from typing import Any, Callable, Dict, Iterable, Optional, Sequence

import numpy as np

from .bits import coordinates, popcount_array
from .constants import MAX_EXACT_N
from .errors import PreconditionError


class BooleanFunction:
    """
    Truth table of a Boolean function on F_2^n.

    The table is indexed by the integer encoding of x (coordinate i in bit i-1)
    and holds +1/-1 as int8. The array is read-only; derived tables (spectrum,
    autocorrelation) are memoized per instance through `cached`.
    """

    __slots__ = ("_n", "_table", "_cache")

    def __init__(self, table: Iterable[int], n: Optional[int] = None):
        """
        Build a function from a sign table.

        Args:
            table: 2^n entries, each +1 or -1
            n: Dimension; inferred from the table length when omitted

        Raises:
            PreconditionError: If the length is not 2^n or an entry is not a sign
        """
        values = np.asarray(table)
        if values.ndim != 1:
            raise PreconditionError("truth table must be one-dimensional")
        size = values.shape[0]
        if n is None:
            if size < 2 or size & (size - 1):
                raise PreconditionError(f"table length {size} is not a power of two >= 2")
            n = size.bit_length() - 1
        if not 1 <= n <= MAX_EXACT_N:
            raise PreconditionError(f"dimension {n} outside [1, {MAX_EXACT_N}]")
        if size != 1 << n:
            raise PreconditionError(f"table length {size} does not equal 2^{n}")
        if not np.all((values == 1) | (values == -1)):
            raise PreconditionError("every table entry must be +1 or -1")

        signs = values.astype(np.int8, copy=True)
        signs.setflags(write=False)
        self._n = int(n)
        self._table = signs
        self._cache: Dict[str, Any] = {}

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "BooleanFunction":
        return cls(signs)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BooleanFunction":
        """Bit 1 encodes -1 (True), bit 0 encodes +1."""
        b = np.asarray(bits, dtype=np.int8)
        return cls(1 - 2 * b)

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[tuple], int]) -> "BooleanFunction":
        """Tabulate fn over coordinate tuples (x_1, ..., x_n)."""
        return cls([fn(coordinates(x, n)) for x in range(1 << n)], n)

    @classmethod
    def constant(cls, n: int, sign: int = 1) -> "BooleanFunction":
        return cls(np.full(1 << n, sign, dtype=np.int8), n)

    @classmethod
    def character(cls, n: int, gamma: int) -> "BooleanFunction":
        """The Fourier character x -> (-1)^(gamma . x)."""
        if not 0 <= gamma < (1 << n):
            raise PreconditionError(f"character index {gamma} outside F_2^{n}")
        points = np.arange(1 << n, dtype=np.int64)
        odd = popcount_array(points & gamma, n) & 1
        return cls(1 - 2 * odd.astype(np.int8), n)

    @classmethod
    def random(cls, n: int, seed: int = 0, stream: int = 0) -> "BooleanFunction":
        """Uniformly random function from a counter-based stream (seed, stream)."""
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream])))
        bits = rng.integers(0, 2, size=1 << n, dtype=np.int8)
        return cls(1 - 2 * bits, n)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        return 1 << self._n

    @property
    def table(self) -> np.ndarray:
        return self._table

    def evaluate(self, x: int) -> int:
        """
        Read f(x).

        Raises:
            PreconditionError: If x is not a point of F_2^n
        """
        if not 0 <= x < self.size:
            raise PreconditionError(f"point {x} outside F_2^{self._n}")
        return int(self._table[x])

    def __call__(self, x: int) -> int:
        return self.evaluate(x)

    def to_bits(self) -> np.ndarray:
        """0/1 view with 1 marking -1."""
        return (self._table < 0).astype(np.uint8)

    def negate(self) -> "BooleanFunction":
        return BooleanFunction(-self._table.astype(np.int16), self._n)

    def lift(self, extra: int = 1) -> "BooleanFunction":
        """
        Extend to n + extra bits, ignoring the new (highest) coordinates.

        This is f(Mx) for the projection M dropping the new coordinates.
        """
        if extra < 0:
            raise PreconditionError("extra coordinate count must be non-negative")
        return BooleanFunction(np.tile(self._table, 1 << extra), self._n + extra)

    def count_negative(self) -> int:
        return int(np.count_nonzero(self._table < 0))

    def cached(self, key: str, factory: Callable[[], Any]) -> Any:
        """Memoize a derived value computed purely from this table."""
        if key not in self._cache:
            self._cache[key] = factory()
        return self._cache[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self._n, self._table.tobytes()))

    def __repr__(self) -> str:
        if self._n <= 4:
            signs = "".join("+" if v > 0 else "-" for v in self._table)
            return f"BooleanFunction(n={self._n}, table='{signs}')"
        return f"BooleanFunction(n={self._n}, negatives={self.count_negative()})"


def xor_function(n: int) -> BooleanFunction:
    """(-1)^(x_1 + ... + x_n), the character at the all-ones vector."""
    return BooleanFunction.character(n, (1 << n) - 1)

