"""Counter-based deterministic random numbers.

Every draw is a keyed hash of (seed, counter tuple); there is no hidden
stream state, so draws are reproducible per index and trivially
parallelizable.  blake2b is used for its stable cross-platform output.
"""

from __future__ import annotations

import struct
from hashlib import blake2b

_MASK64 = (1 << 64) - 1


class CounterRng:
    """Stateless generator: value = hash(seed, *counters)."""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64

    def raw64(self, *counters: int) -> int:
        """Uniform 64-bit value for this counter tuple."""
        msg = struct.pack(f">{len(counters) + 1}Q", self.seed, *(c & _MASK64 for c in counters))
        return int.from_bytes(blake2b(msg, digest_size=8).digest(), "big")

    def below(self, bound: int, *counters: int) -> int:
        """Uniform integer in [0, bound), by rejection (no modulo bias).

        Appends an attempt counter to the tuple, so callers must not reuse
        the same counters for two different draws.
        """
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        attempt = 0
        while True:
            v = self.raw64(*counters, attempt)
            if v < limit:
                return v % bound
            attempt += 1

    def integer_in(self, lo: int, hi: int, *counters: int) -> int:
        """Uniform integer in the inclusive range [lo, hi]."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.below(hi - lo + 1, *counters)
