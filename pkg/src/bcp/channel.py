"""Deterministic low-bandwidth lossy channel.

Impairment model: the whole frame is dropped with probability
drop_probability, otherwise every bit flips independently with
probability bit_error_rate.  Randomness comes from the fixed
splitmix-style stream defined in bcp._chanrng, seeded by
(seed, stream_position), so a transmission is a pure function of its
arguments.

Time is virtual: a delivery reports 8 * len(frame) / bandwidth seconds
as an exact Fraction and never sleeps.

The per-bit inner loop runs in the compiled Cython kernel when it was
built, and in a numpy fallback otherwise; both produce identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._chanrng import draw, stream_base, threshold
from .errors import BadConfig, InvalidInput
from .rsa2 import _parse_kv

try:
    from . import _chankernel as _kernel

    USING_COMPILED = True
except ImportError:  # extension not built; numpy path
    from . import _chanfallback as _kernel

    USING_COMPILED = False

_TWO64 = 1 << 64


@dataclass(frozen=True)
class ChannelConfig:
    bandwidth_bits_per_sec: int
    bit_error_rate: Fraction
    drop_probability: Fraction
    seed: int

    def __post_init__(self) -> None:
        if self.bandwidth_bits_per_sec < 1:
            raise BadConfig("bandwidth must be >= 1 bit/s")
        if not 0 <= self.bit_error_rate <= 1:
            raise BadConfig(f"bit_error_rate {self.bit_error_rate} outside [0, 1]")
        if not 0 <= self.drop_probability <= 1:
            raise BadConfig(f"drop_probability {self.drop_probability} outside [0, 1]")


@dataclass(frozen=True)
class Delivery:
    payload: bytes | None  # None = dropped
    elapsed_virtual_seconds: Fraction

    @property
    def dropped(self) -> bool:
        return self.payload is None


def transmit(frame_bytes: bytes, config: ChannelConfig, stream_position: int) -> Delivery:
    if len(frame_bytes) == 0:
        raise InvalidInput("cannot transmit an empty frame")
    elapsed = Fraction(8 * len(frame_bytes), config.bandwidth_bits_per_sec)
    s0 = stream_base(config.seed, stream_position)
    drop = config.drop_probability
    if draw(s0, 0) < threshold(drop.numerator, drop.denominator):
        return Delivery(None, elapsed)
    ber = config.bit_error_rate
    if ber == 0:
        return Delivery(bytes(frame_bytes), elapsed)
    thr = threshold(ber.numerator, ber.denominator)
    out = _kernel.corrupt_bits(bytes(frame_bytes), s0, min(thr, _TWO64 - 1), thr >= _TWO64)
    return Delivery(out, elapsed)


def expected_flip_count(frame_bytes: bytes, config: ChannelConfig) -> Fraction:
    return 8 * len(frame_bytes) * config.bit_error_rate


def _parse_ratio(text: str) -> Fraction:
    num, den = text.split("/")
    return Fraction(int(num), int(den))


def load_channel_config(path) -> ChannelConfig:
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    fields: dict[str, str] = {}
    for ln in lines:
        try:
            k, v = ln.split("=", 1)
        except ValueError as exc:
            raise BadConfig(f"{path}: cannot parse line {ln!r}") from exc
        fields[k.strip()] = v.strip()
    try:
        return ChannelConfig(
            bandwidth_bits_per_sec=int(fields["bandwidth"]),
            bit_error_rate=_parse_ratio(fields["ber"]),
            drop_probability=_parse_ratio(fields["drop"]),
            seed=int(fields["seed"]),
        )
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise BadConfig(f"{path}: {exc}") from exc


def save_channel_config(config: ChannelConfig, path) -> None:
    ber, drop = config.bit_error_rate, config.drop_probability
    with open(path, "w", encoding="ascii") as fh:
        fh.write(
            f"bandwidth={config.bandwidth_bits_per_sec}\n"
            f"ber={ber.numerator}/{ber.denominator}\n"
            f"drop={drop.numerator}/{drop.denominator}\n"
            f"seed={config.seed}\n"
        )
