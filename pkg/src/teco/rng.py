"""Seeded randomness shared by every stochastic operation in the toolkit.

The repo-wide generator is NumPy's PCG64 (O'Neill's permuted congruential
generator, 128-bit state), driven through ``numpy.random.Generator``. A given
64-bit seed yields the same stream on every platform. Derived streams are
seeded by a BLAKE2b-64 hash of the parent seed and a label path, so parallel
work never shares a stream.
"""

from __future__ import annotations

import hashlib
import struct

import numpy as np

RNG_ALGORITHM = "pcg64"

_U64 = 0xFFFFFFFFFFFFFFFF


def derive_seed(*parts: int | str) -> int:
    """Collapse a seed plus label path into a fresh 64-bit seed.

    Integers are hashed as little-endian u64, strings as UTF-8; each part is
    length-prefixed so distinct paths cannot collide by concatenation.
    """
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        if isinstance(part, (int, np.integer)):
            data = b"i" + struct.pack("<Q", int(part) & _U64)
        else:
            data = b"s" + str(part).encode("utf-8")
        h.update(struct.pack("<I", len(data)))
        h.update(data)
    return int.from_bytes(h.digest(), "little")


class RngStream:
    """Single-owner random stream: PCG64 behind a fixed 64-bit seed."""

    algorithm = RNG_ALGORITHM

    def __init__(self, seed: int):
        self.seed = int(seed) & _U64
        self.generator = np.random.Generator(np.random.PCG64(self.seed))

    def child(self, *labels: int | str) -> "RngStream":
        """Derive an independent stream for a labelled subtask."""
        return RngStream(derive_seed(self.seed, *labels))

    def __repr__(self) -> str:  # pragma: no cover
        return f"RngStream(seed={self.seed})"
