"""Byte <-> decimal-digit conversion and arithmetic coding over digits 0-9.

Digit strings are plain ``str`` objects containing only '0'..'9'.  All
interval arithmetic uses ``fractions.Fraction`` so round trips are exact
at any length and leading zeros of the code fraction survive (they are
digits, never a numeric value).

The encoder emits the shortest digit string whose whole refinement
interval [0.f1..fm, 0.f1..fm + 10^-m) fits inside the final coding
interval.  That termination rule makes the uniform model an exact fixed
point: encode(s, uniform) == s for every digit string s, trailing zeros
included.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidInput, InvalidModel, MalformedDigits, MalformedFraction

_DIGITS = set("0123456789")


def _check_digits(s: str, what: str = "digit string") -> None:
    if not s:
        raise InvalidInput(f"empty {what}")
    if not set(s) <= _DIGITS:
        raise InvalidInput(f"{what} contains non-digit characters")


@dataclass(frozen=True)
class ProbabilityModel:
    """Exact rational probabilities for the ten decimal digits.

    ``cum`` holds the eleven cumulative bounds cum[0]=0 .. cum[10]=1;
    symbol d owns the subinterval [cum[d], cum[d+1]).
    """

    probs: tuple[Fraction, ...]
    cum: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.probs) != 10:
            raise InvalidModel(f"expected 10 probabilities, got {len(self.probs)}")
        if any(p <= 0 for p in self.probs):
            raise InvalidModel("all probabilities must be strictly positive")
        total = sum(self.probs)
        if total != 1:
            raise InvalidModel(f"probabilities sum to {total}, not 1")
        bounds = [Fraction(0)]
        for p in self.probs:
            bounds.append(bounds[-1] + p)
        object.__setattr__(self, "cum", tuple(bounds))

    @classmethod
    def uniform(cls) -> "ProbabilityModel":
        return cls(tuple(Fraction(1, 10) for _ in range(10)))

    @classmethod
    def parse(cls, text: str) -> "ProbabilityModel":
        """Parse the 10-line "num/den" model file format."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 10:
            raise InvalidModel(f"model file must have 10 lines, got {len(lines)}")
        probs = []
        for i, ln in enumerate(lines):
            try:
                num, den = ln.split("/")
                probs.append(Fraction(int(num), int(den)))
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidModel(f"line {i}: cannot parse {ln!r} as num/den") from exc
        return cls(tuple(probs))

    def dump(self) -> str:
        return "".join(f"{p.numerator}/{p.denominator}\n" for p in self.probs)


def load_model(path) -> ProbabilityModel:
    with open(path, "r", encoding="ascii") as fh:
        return ProbabilityModel.parse(fh.read())


def save_model(model: ProbabilityModel, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(model.dump())


def decimalize(payload: bytes) -> str:
    """Render each byte as three zero-padded decimal digits."""
    if len(payload) == 0:
        raise InvalidInput("empty payload")
    return "".join(f"{b:03d}" for b in payload)


def dedecimalize(digits: str) -> bytes:
    """Inverse of decimalize: every 3-digit group is one byte."""
    _check_digits(digits)
    if len(digits) % 3 != 0:
        raise MalformedDigits(f"length {len(digits)} not divisible by 3")
    out = bytearray()
    for i in range(0, len(digits), 3):
        v = int(digits[i : i + 3])
        if v > 255:
            raise MalformedDigits(f"group {digits[i:i+3]!r} exceeds byte range")
        out.append(v)
    return bytes(out)


def _final_interval(plaintext: str, model: ProbabilityModel) -> tuple[Fraction, Fraction]:
    low = Fraction(0)
    diff = Fraction(1)
    for ch in plaintext:
        d = ord(ch) - 48
        low += diff * model.cum[d]
        diff *= model.probs[d]
    return low, low + diff


def arith_encode(plaintext: str, model: ProbabilityModel) -> str:
    """Encode a digit string to the code fraction's digits.

    Returns the shortest f1..fm such that the decimal refinement
    interval [0.f1..fm, 0.f1..fm + 10^-m) is contained in the final
    coding interval.  Leading zeros are real output digits.
    """
    _check_digits(plaintext, "plaintext")
    low, high = _final_interval(plaintext, model)
    diff = high - low
    # a length-m refinement interval is 10^-m wide, so nothing shorter
    # than ceil(log10(1/diff)) digits can fit; start the search there
    m = max(1, len(str(diff.denominator // diff.numerator)) - 1)
    while True:
        scale = 10 ** m
        # a = ceil(low * scale): smallest grid point not below low
        a = -((-low.numerator * scale) // low.denominator)
        if Fraction(a + 1, scale) <= high:
            return str(a).zfill(m)
        m += 1


def arith_decode(fraction: str, symbol_count: int, model: ProbabilityModel) -> str:
    """Decode exactly symbol_count digits from the code fraction."""
    if symbol_count < 1:
        raise InvalidInput(f"symbol_count must be >= 1, got {symbol_count}")
    if not fraction:
        raise MalformedFraction("empty fraction")
    if not set(fraction) <= _DIGITS:
        raise MalformedFraction("fraction contains non-digit characters")
    t = Fraction(int(fraction), 10 ** len(fraction))
    # digit strings always denote values in [0,1); kept as a guard for
    # callers constructing Fractions by other means
    if not 0 <= t < 1:
        raise MalformedFraction(f"fraction value {t} outside [0, 1)")
    out = []
    for _ in range(symbol_count):
        d = bisect_right(model.cum, t) - 1
        out.append(chr(48 + d))
        t = (t - model.cum[d]) / model.probs[d]
    return "".join(out)
