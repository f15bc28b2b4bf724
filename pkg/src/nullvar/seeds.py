"""Deterministic 64-bit linear congruential generator for reproducible sampling.

state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64, with the
top 31 bits of each state used for draws.  Identical seeds give identical
sample streams on every platform; all acceptance randomness flows through this.
"""

from __future__ import annotations

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK64 = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u31(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK64
        return self.state >> 33

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] inclusive (modulo bias is irrelevant here)."""
        if hi < lo:
            raise ValueError("empty range")
        span = hi - lo + 1
        return lo + self.next_u31() % span

    def randint_nonzero(self, lo: int, hi: int) -> int:
        while True:
            v = self.randint(lo, hi)
            if v != 0:
                return v
