"""The channel's deterministic random stream, defined exactly.

Any implementation (pure Python, numpy, compiled) must reproduce this
bit-for-bit, so the generator is pinned down by its constants rather
than by a library:

    GAMMA = 0x9E3779B97F4A7C15
    mix(z) = splitmix64 finalizer:
        z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9   (mod 2^64)
        z ^= z >> 27;  z *= 0x94D049BB133111EB   (mod 2^64)
        z ^= z >> 31

    stream base   s0  = mix(seed + GAMMA * stream_position)   (mod 2^64)
    draw j >= 0   u_j = mix(s0 + GAMMA * (j + 1))             (mod 2^64)

Draw 0 decides whole-frame drop; draw i+1 decides whether bit i flips
(bits are numbered byte by byte, most significant bit first).  A draw u
fires against a rational probability num/den when
u < floor(num * 2^64 / den).
"""

GAMMA = 0x9E3779B97F4A7C15
MASK64 = (1 << 64) - 1


def mix64(z: int) -> int:
    z &= MASK64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & MASK64
    z ^= z >> 31
    return z


def stream_base(seed: int, stream_position: int) -> int:
    return mix64((seed + GAMMA * stream_position) & MASK64)


def draw(s0: int, j: int) -> int:
    return mix64((s0 + GAMMA * (j + 1)) & MASK64)


def threshold(num: int, den: int) -> int:
    """Largest-below-2^64 firing threshold for probability num/den.
    May equal 2^64 exactly when num/den = 1 (every draw fires)."""
    return (num << 64) // den
