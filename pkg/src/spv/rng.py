"""Seeded integer sampling for the fuzzer.

Raw 64-bit words come from numpy's PCG64 (PCG XSL-RR 128/64) seeded through
``SeedSequence(seed)``; raw output is stable across numpy releases, unlike
``Generator`` methods.  Bounded integers use plain rejection sampling so the
mapping from words to draws is fixed here, not by numpy.
"""

from __future__ import annotations

import numpy as np

_TWO64 = 1 << 64


class Pcg64Sampler:
    def __init__(self, seed: int):
        if not 0 <= seed < _TWO64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self._bits = np.random.PCG64(seed)

    def next_u64(self) -> int:
        return int(self._bits.random_raw())

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` inclusive."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = _TWO64 - (_TWO64 % span)
        while True:
            r = self.next_u64()
            if r < limit:
                return lo + r % span
