"""Bit strings, linear pseudo-Boolean functions, and mutation parameters.

Positions are indexed 1..n with position 1 carrying the lowest weight.  A
string rendering shows the highest position first, so ``"110"`` for n=3 means
position 3 and position 2 are set.  All value types here are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

__all__ = [
    "BitString",
    "Kind",
    "LinearFunction",
    "MutationParams",
    "Ordering",
    "compare",
    "make_binval",
    "make_generic",
    "make_onemax",
]


@dataclass(frozen=True, slots=True)
class BitString:
    """An immutable length-n bit string backed by an integer mask.

    Bit (i-1) of ``value`` holds position i, so XOR, popcount and the
    packed-value comparison used for BINVAL are single integer operations.
    """

    n: int
    value: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise ValueError(f"value {self.value} out of range for n={self.n}")

    @classmethod
    def zeros(cls, n: int) -> "BitString":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitString":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> "BitString":
        """The string with only position i set (1 <= i <= n)."""
        if not 1 <= i <= n:
            raise ValueError(f"unit position {i} out of range 1..{n}")
        return cls(n, 1 << (i - 1))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitString":
        """Build from bits listed in position order (position 1 first)."""
        value = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b!r}")
            value |= b << n
            n += 1
        if n == 0:
            raise ValueError("empty bit sequence")
        return cls(n, value)

    @classmethod
    def from_string(cls, s: str) -> "BitString":
        """Parse an ASCII 0/1 string written highest position first."""
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {s!r}")
        return cls(len(s), int(s, 2))

    def bit(self, i: int) -> int:
        """Value at position i (1-based)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} out of range 1..{self.n}")
        return (self.value >> (i - 1)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        """Bits in position order (index 0 is position 1)."""
        return tuple((self.value >> i) & 1 for i in range(self.n))

    def popcount(self) -> int:
        return self.value.bit_count()

    def __xor__(self, other: "BitString") -> "BitString":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return BitString(self.n, self.value ^ other.value)

    def to_string(self) -> str:
        return format(self.value, f"0{self.n}b")

    def __str__(self) -> str:
        return self.to_string()


class Kind(Enum):
    GENERIC = "generic"
    ONEMAX = "onemax"
    BINVAL = "binval"


class Ordering(Enum):
    """Outcome of comparing f(y) against f(x)."""

    LESS_OR_EQUAL = "less_or_equal"
    GREATER = "greater"


@dataclass(frozen=True, slots=True)
class LinearFunction:
    """A linear function x -> sum of w_j x_j with positive weights.

    ONEMAX has all weights 1 and BINVAL has weight 2^j at position j; both
    keep their weights implicit.  GENERIC stores an explicit weight tuple.
    """

    kind: Kind
    n: int
    weights: Optional[tuple[float, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.kind is Kind.GENERIC:
            if self.weights is None or len(self.weights) != self.n:
                raise ValueError("GENERIC requires a weight tuple of length n")
            if any(not (w > 0) for w in self.weights):
                raise ValueError("weights must be strictly positive")
        elif self.weights is not None:
            raise ValueError(f"{self.kind.value} keeps its weights implicit")

    def weight(self, j: int):
        """Weight at position j; exact int for ONEMAX/BINVAL."""
        if not 1 <= j <= self.n:
            raise ValueError(f"position {j} out of range 1..{self.n}")
        if self.kind is Kind.ONEMAX:
            return 1
        if self.kind is Kind.BINVAL:
            return 1 << j
        return self.weights[j - 1]

    @property
    def is_monotone(self) -> bool:
        if self.kind is not Kind.GENERIC:
            return True
        return all(a <= b for a, b in zip(self.weights, self.weights[1:]))

    def evaluate(self, x: BitString):
        """Function value at x; exact int for ONEMAX/BINVAL.

        BINVAL values are exact arbitrary-precision integers, but ordering
        queries should go through :func:`compare`, which never builds them.
        """
        self._check_arg(x)
        if self.kind is Kind.ONEMAX:
            return x.popcount()
        if self.kind is Kind.BINVAL:
            # sum of 2^i over set positions i == twice the packed mask
            return 2 * x.value
        return math.fsum(
            w for w, b in zip(self.weights, x.bits) if b
        )

    def _check_arg(self, x: BitString) -> None:
        if x.n != self.n:
            raise ValueError(f"argument length {x.n} does not match n={self.n}")

    def to_json_dict(self) -> dict:
        d: dict = {"kind": self.kind.value, "n": self.n}
        if self.kind is Kind.GENERIC:
            d["weights"] = list(self.weights)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "LinearFunction":
        kind = Kind(d["kind"])
        if kind is Kind.GENERIC:
            weights = tuple(float(w) for w in d["weights"])
            return cls(kind, d.get("n", len(weights)), weights)
        return cls(kind, d["n"])


def make_onemax(n: int) -> LinearFunction:
    return LinearFunction(Kind.ONEMAX, n)


def make_binval(n: int) -> LinearFunction:
    return LinearFunction(Kind.BINVAL, n)


def make_generic(weights: Sequence[float]) -> LinearFunction:
    return LinearFunction(Kind.GENERIC, len(weights), tuple(float(w) for w in weights))


def _compare3(f: LinearFunction, y: BitString, x: BitString) -> int:
    """Sign of f(y) - f(x): -1, 0, or +1.  Exact for every kind.

    BINVAL uses the highest-differing-bit rule: the highest position where
    the strings differ decides, because its weight exceeds the sum of all
    lower weights.  GENERIC feeds the signed weight differences through
    compensated summation, so the sign matches exact accumulation.
    """
    f._check_arg(y)
    f._check_arg(x)
    if y.value == x.value:
        return 0
    if f.kind is Kind.ONEMAX:
        dy, dx = y.popcount(), x.popcount()
        return (dy > dx) - (dy < dx)
    if f.kind is Kind.BINVAL:
        top = (y.value ^ x.value).bit_length()  # highest differing position
        return 1 if (y.value >> (top - 1)) & 1 else -1
    diff = math.fsum(
        w if yb else -w
        for w, yb, xb in zip(f.weights, y.bits, x.bits)
        if yb != xb
    )
    return (diff > 0) - (diff < 0)


def compare(f: LinearFunction, y: BitString, x: BitString) -> Ordering:
    """Order f(y) against f(x) without materializing large values."""
    return Ordering.GREATER if _compare3(f, y, x) > 0 else Ordering.LESS_OR_EQUAL


@dataclass(frozen=True, slots=True)
class MutationParams:
    """Problem size n and mutation strength c; each bit flips with p = c/n.

    c may equal n (every bit flips deterministically) but not exceed it,
    since p is a probability.
    """

    n: int
    c: float

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if self.c > self.n:
            raise ValueError(f"c={self.c} exceeds n={self.n}; p would exceed 1")

    @property
    def p(self) -> float:
        return self.c / self.n
