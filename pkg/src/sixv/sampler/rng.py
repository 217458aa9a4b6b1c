"""Counter-based random streams.

Streams are Philox generators keyed by (seed, sample-index) with the sweep
and row indices placed in the high words of the 256-bit counter, so every
(seed, sample, sweep, row) names a disjoint block of the Philox sequence.
Identical keys replay identical uniforms, which makes samples bit-reproducible
under any parallel schedule, and regenerating a longer block from the same
key yields the same prefix (used when a geometric run outgrows its buffer).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.random import Generator, Philox


@dataclass(frozen=True)
class RngStream:
    seed: int
    stream_id: int = 0

    def block(self, sweep: int, row: int, n: int) -> np.ndarray:
        """n uniforms from the (sweep, row) substream; deterministic and
        prefix-stable in n."""
        bg = Philox(key=np.array([self.seed % 2**64, self.stream_id % 2**64],
                                 dtype=np.uint64),
                    counter=np.array([0, 0, row, sweep], dtype=np.uint64))
        return Generator(bg).random(n)

    def child(self, stream_id: int) -> "RngStream":
        return RngStream(seed=self.seed, stream_id=stream_id)

    def generator(self, sweep: int = 0, row: int = 0) -> Generator:
        bg = Philox(key=np.array([self.seed % 2**64, self.stream_id % 2**64],
                                 dtype=np.uint64),
                    counter=np.array([0, 0, row, sweep], dtype=np.uint64))
        return Generator(bg)
