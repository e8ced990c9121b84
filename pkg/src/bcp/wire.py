"""Frame assembly and parsing.

One transmission = one frame:

    BCP1|<mac>|<dh_public>|<symbol_count>|<fraction_length>|<pad_count>|<payload>

The header keeps the protocol's field order (authentication code, then
key-exchange value, then ciphertext); the three coding fields in between
are what the receiver needs to terminate the decoder and strip block
padding.  Everything is printable ASCII; the armored payload is the
final field and runs to end of frame, so '|' inside it (a legal armor
character) needs no escaping.

Assembly writes numeric fields in minimal decimal.  Parsing accepts
leading zeros (the value is what counts), so any digit-level corruption
of a header field surfaces as a changed value, never as a parse
ambiguity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadMagic, InvalidInput, MalformedArmor, MalformedField, Truncated
from .rsa2 import ARMOR_BASE, ARMOR_OFFSET

MAGIC = b"BCP1"
_NUMERIC_FIELDS = ("mac", "dh_public", "symbol_count", "fraction_length", "pad_count")


@dataclass(frozen=True)
class Frame:
    mac: int
    dh_public: int
    symbol_count: int
    fraction_length: int
    pad_count: int
    armored_payload: str


def _check_frame(frame: Frame) -> None:
    if frame.mac < 0:
        raise InvalidInput("mac must be >= 0")
    if frame.dh_public < 1:
        raise InvalidInput("dh_public must be >= 1")
    if frame.symbol_count < 1 or frame.fraction_length < 1:
        raise InvalidInput("symbol_count and fraction_length must be >= 1")
    if frame.pad_count < 0:
        raise InvalidInput("pad_count must be >= 0")
    if not frame.armored_payload:
        raise InvalidInput("armored_payload must be nonempty")
    for ch in frame.armored_payload:
        if not ARMOR_OFFSET <= ord(ch) < ARMOR_OFFSET + ARMOR_BASE:
            raise InvalidInput(f"payload character {ch!r} outside armor alphabet")


def assemble_frame(frame: Frame) -> bytes:
    _check_frame(frame)
    head = "|".join(
        (
            MAGIC.decode("ascii"),
            str(frame.mac),
            str(frame.dh_public),
            str(frame.symbol_count),
            str(frame.fraction_length),
            str(frame.pad_count),
            frame.armored_payload,
        )
    )
    return head.encode("ascii")


def parse_frame(data: bytes) -> Frame:
    if not data.startswith(MAGIC):
        raise BadMagic("frame does not start with BCP1")
    parts = data.split(b"|", 6)
    if len(parts) < 7:
        raise Truncated(f"expected 6 '|' separators, found {len(parts) - 1}")
    if parts[0] != MAGIC:
        raise BadMagic(f"bad magic field {parts[0]!r}")
    values = {}
    for name, raw in zip(_NUMERIC_FIELDS, parts[1:6]):
        text = raw.decode("ascii", errors="replace")
        if not text.isascii() or not text.isdigit():
            raise MalformedField(f"field {name} is not a decimal integer: {text!r}")
        values[name] = int(text)
    try:
        payload = parts[6].decode("ascii")
    except UnicodeDecodeError as exc:
        raise MalformedArmor("payload is not ASCII") from exc
    if not payload:
        raise Truncated("empty payload field")
    for ch in payload:
        if not ARMOR_OFFSET <= ord(ch) < ARMOR_OFFSET + ARMOR_BASE:
            raise MalformedArmor(f"payload character {ch!r} outside armor alphabet")
    if values["dh_public"] < 1 or values["symbol_count"] < 1 or values["fraction_length"] < 1:
        raise MalformedField("dh_public, symbol_count, and fraction_length must be >= 1")
    return Frame(armored_payload=payload, **values)
