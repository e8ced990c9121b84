"""numpy implementation of the bit-impairment kernel.

Used when the compiled extension is unavailable.  Must agree with
bcp._chankernel draw for draw; tests compare the two directly.
"""

import numpy as np

from ._chanrng import GAMMA, MASK64

_G = np.uint64(GAMMA)
_C1 = np.uint64(0xBF58476D1CE4E5B9)
_C2 = np.uint64(0x94D049BB133111EB)


def corrupt_bits(data: bytes, s0: int, ber_threshold: int, flip_all: bool) -> bytes:
    """Flip bit i of data iff draw i+1 of the stream based at s0 falls
    below ber_threshold (or unconditionally when flip_all)."""
    nbits = 8 * len(data)
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    if flip_all:
        return np.packbits(bits ^ 1).tobytes()
    # draw j for bit i is j = i + 1, argument s0 + GAMMA*(j+1)
    j = np.arange(2, nbits + 2, dtype=np.uint64)
    z = np.uint64(s0 & MASK64) + _G * j
    z ^= z >> np.uint64(30)
    z *= _C1
    z ^= z >> np.uint64(27)
    z *= _C2
    z ^= z >> np.uint64(31)
    flips = (z < np.uint64(ber_threshold)).astype(np.uint8)
    return np.packbits(bits ^ flips).tobytes()
