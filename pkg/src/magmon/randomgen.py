"""Seeded random Cayley tables with a portable generator.

The stream is SplitMix64, fixed here (and documented in the README) so
that the same (size, seed) pair yields the same table in any conforming
implementation, independent of platform or language runtime.
"""

from __future__ import annotations

from .algebra import Algebra
from .errors import InvalidElementError

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """64-bit SplitMix sequence; next_below draws uniformly via rejection."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform draw from [0, bound); rejects draws past the largest
        multiple of bound to avoid modulo bias."""
        if not isinstance(bound, int) or isinstance(bound, bool) or bound < 1:
            raise InvalidElementError(f"bound must be >= 1, got {bound!r}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % bound


def random_table(size: int, rng: SplitMix64) -> tuple[tuple[int, ...], ...]:
    """One size x size table, cells drawn row-major from the stream."""
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise InvalidElementError(f"size must be >= 1, got {size!r}")
    return tuple(
        tuple(rng.next_below(size) for _ in range(size)) for _ in range(size)
    )


def random_algebra(size: int, seed: int) -> Algebra:
    return Algebra(random_table(size, SplitMix64(seed)))


def random_algebras(size: int, seed: int, count: int):
    """Successive algebras drawn from a single seeded stream."""
    rng = SplitMix64(seed)
    for _ in range(count):
        yield Algebra(random_table(size, rng))
