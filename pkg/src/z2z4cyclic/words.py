"""Codewords of Z2^alpha x Z4^beta."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _rotate(seq: tuple[int, ...], i: int) -> tuple[int, ...]:
    if not seq:
        return seq
    i %= len(seq)
    return seq[-i:] + seq[:-i] if i else seq


@dataclass(frozen=True, init=False)
class MixedWord:
    """A vector ``(u | u')`` with ``u`` over Z2 and ``u'`` over Z4."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __init__(self, x: Iterable[int] = (), y: Iterable[int] = ()):
        x = tuple(int(v) for v in x)
        y = tuple(int(v) for v in y)
        if any(v not in (0, 1) for v in x):
            raise ValueError(f"binary part has entries outside {{0, 1}}: {x}")
        if any(not 0 <= v < 4 for v in y):
            raise ValueError(f"quaternary part has entries outside {{0, 1, 2, 3}}: {y}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def zero(cls, alpha: int, beta: int) -> MixedWord:
        return cls((0,) * alpha, (0,) * beta)

    @classmethod
    def reduce(cls, x: Iterable[int], y: Iterable[int]) -> MixedWord:
        """Build a word from arbitrary integers, reducing mod 2 and mod 4."""
        return cls((v % 2 for v in x), (v % 4 for v in y))

    @property
    def alpha(self) -> int:
        return len(self.x)

    @property
    def beta(self) -> int:
        return len(self.y)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.x), len(self.y)

    def is_zero(self) -> bool:
        return not any(self.x) and not any(self.y)

    def __add__(self, other: MixedWord) -> MixedWord:
        if self.shape != other.shape:
            raise ValueError("words of different shapes")
        return MixedWord.reduce(
            (a + b for a, b in zip(self.x, other.x)),
            (a + b for a, b in zip(self.y, other.y)),
        )

    def __neg__(self) -> MixedWord:
        return MixedWord.reduce(self.x, (-v for v in self.y))

    def __sub__(self, other: MixedWord) -> MixedWord:
        return self + (-other)

    def __mul__(self, k: int) -> MixedWord:
        """Z4 scalar action; on the binary part ``k`` acts through ``k mod 2``."""
        return MixedWord.reduce((k * v for v in self.x), (k * v for v in self.y))

    __rmul__ = __mul__

    def order(self) -> int:
        if self.is_zero():
            return 1
        return 4 if any(v % 2 for v in self.y) else 2

    def shift(self, i: int = 1) -> MixedWord:
        """Multiply by ``x^i``: rotate both parts ``i`` places to the right."""
        return MixedWord(_rotate(self.x, i), _rotate(self.y, i))

    # bit-sliced encoding used by the kernels

    def to_bits(self) -> tuple[int, int]:
        a = len(self.x)
        lo = 0
        hi = 0
        for j, v in enumerate(self.x):
            lo |= v << j
        for j, v in enumerate(self.y):
            lo |= (v & 1) << (a + j)
            hi |= (v >> 1) << (a + j)
        return lo, hi

    @classmethod
    def from_bits(cls, lo: int, hi: int, alpha: int, beta: int) -> MixedWord:
        x = tuple((lo >> j) & 1 for j in range(alpha))
        y = tuple(((lo >> (alpha + j)) & 1) | (((hi >> (alpha + j)) & 1) << 1)
                  for j in range(beta))
        return cls(x, y)

    def __str__(self):
        left = " ".join(map(str, self.x))
        right = " ".join(map(str, self.y))
        return f"{left} | {right}".strip()

    def __repr__(self):
        return f"MixedWord({''.join(map(str, self.x))}|{''.join(map(str, self.y))})"


def ymask(alpha: int, beta: int) -> int:
    """Bitmask of the quaternary coordinates in the bit-sliced encoding."""
    return ((1 << beta) - 1) << alpha
