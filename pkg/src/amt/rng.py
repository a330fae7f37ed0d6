"""Bit-reproducible pseudo-random numbers for matching search and generators.

A 64-bit linear congruential generator (Knuth's MMIX constants).  The high
32 bits of each state are used as output; bounded draws use a
multiply-shift reduction, so every platform sees the same sequence.
"""

from __future__ import annotations

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u32(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK
        return self.state >> 32

    def below(self, n: int) -> int:
        """Uniform-ish integer in ``[0, n)`` for ``1 <= n <= 2**32``."""
        return (self.next_u32() * n) >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Integer in the closed range ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return self.next_u32() / 2**32

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, in place, from the last position down."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def choice(self, items):
        return items[self.below(len(items))]
