"""Counter-based random streams.

Every stochastic routine in the package takes an :class:`RngSpec` instead of
a bare seed.  The pair ``(master_seed, stream_id)`` keys a Philox generator,
so replica ``k`` of an experiment can draw from ``spec.stream(k)`` and get a
stream that is independent of every other replica and independent of how the
replicas are distributed over worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RngSpec:
    """A reproducible random stream: master seed plus stream id."""

    master_seed: int
    stream_id: int = 0

    def __post_init__(self):
        if self.stream_id < 0:
            raise ValueError("stream_id must be >= 0")

    def stream(self, k: int) -> "RngSpec":
        """The k-th derived stream under the same master seed."""
        return RngSpec(self.master_seed, k)

    def generator(self) -> np.random.Generator:
        key = np.array(
            [self.master_seed & _MASK64, self.stream_id & _MASK64],
            dtype=np.uint64,
        )
        return np.random.Generator(np.random.Philox(key=key))
