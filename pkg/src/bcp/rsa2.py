"""Textbook RSA over decimal-digit blocks, with printable-ASCII armoring.

Deliberately desk-scale: moduli like n = 187 are the intended regime, so
primality is deterministic trial division and there is no padding scheme.
Encryption is deterministic (identical blocks give identical ciphertext)
and the whole construction is insecure by modern standards; it exists to
make the surrounding protocol executable, not to protect anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadConfig,
    BadExponent,
    BlockOverflow,
    CiphertextTooLarge,
    DegenerateModulus,
    InvalidInput,
    MalformedArmor,
    MessageTooLarge,
    ModulusTooSmall,
    NotPrime,
)

ARMOR_BASE = 94
ARMOR_OFFSET = 33  # '!'; alphabet is the 94 printable chars '!'..'~'


@dataclass(frozen=True)
class RsaPublicKey:
    e: int
    n: int


@dataclass(frozen=True)
class RsaPrivateKey:
    d: int
    n: int


@dataclass(frozen=True)
class RsaKeyPair:
    public: RsaPublicKey
    private: RsaPrivateKey
    # generation witnesses, kept for assertions, never serialized
    p: int
    q: int
    phi: int


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine at the key sizes used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def keygen(p: int, q: int, e: int) -> RsaKeyPair:
    if not is_prime(p):
        raise NotPrime(f"P = {p} is not prime")
    if not is_prime(q):
        raise NotPrime(f"Q = {q} is not prime")
    if p == q:
        raise DegenerateModulus("P and Q must be distinct")
    n = p * q
    phi = (p - 1) * (q - 1)
    if not 1 < e < phi:
        raise BadExponent(f"e must satisfy 1 < e < {phi}, got {e}")
    if math.gcd(e, phi) != 1:
        raise BadExponent(f"gcd(e={e}, phi={phi}) != 1")
    d = pow(e, -1, phi)
    return RsaKeyPair(RsaPublicKey(e, n), RsaPrivateKey(d, n), p, q, phi)


def auto_exponent(phi: int) -> int:
    """Smallest e >= 3 coprime to phi."""
    e = 3
    while math.gcd(e, phi) != 1:
        e += 1
    return e


def block_width(n: int) -> int:
    """Digits per block: the largest k with 10^k <= n, so any k-digit
    value is < n."""
    if n < 10:
        raise ModulusTooSmall(f"n = {n} < 10 cannot hold one decimal digit")
    return len(str(n)) - 1


def block(fraction: str, n: int) -> tuple[list[int], int]:
    """Split a digit string into residues mod n.

    Right-pads with zeros to a multiple of the block width; returns the
    residues and the pad count so the receiver can strip the padding.
    """
    k = block_width(n)
    pad = (-len(fraction)) % k
    padded = fraction + "0" * pad
    residues = [int(padded[i : i + k]) for i in range(0, len(padded), k)]
    return residues, pad


def unblock(residues: list[int], pad_count: int, fraction_length: int, n: int) -> str:
    """Inverse of block.  BlockOverflow signals a residue too wide for a
    block, i.e. decryption under the wrong key."""
    k = block_width(n)
    limit = 10 ** k
    for r in residues:
        if not 0 <= r < limit:
            raise BlockOverflow(f"residue {r} does not fit in {k} digits")
    joined = "".join(str(r).zfill(k) for r in residues)
    if fraction_length != len(joined) - pad_count:
        raise InvalidInput(
            f"fraction_length {fraction_length} inconsistent with "
            f"{len(residues)} blocks of width {k} minus pad {pad_count}"
        )
    return joined[: len(joined) - pad_count]


def encrypt_block(m: int, key: RsaPublicKey) -> int:
    if not 0 <= m < key.n:
        raise MessageTooLarge(f"block {m} outside [0, {key.n})")
    return pow(m, key.e, key.n)


def decrypt_block(c: int, key: RsaPrivateKey) -> int:
    if not 0 <= c < key.n:
        raise CiphertextTooLarge(f"ciphertext {c} outside [0, {key.n})")
    return pow(c, key.d, key.n)


def armor_width(n: int) -> int:
    """Characters per residue: smallest w with 94^w >= n."""
    w = 1
    while ARMOR_BASE ** w < n:
        w += 1
    return w


def armor(residues: list[int], n: int) -> str:
    """Fixed-width base-94 rendering of residues over '!'..'~'."""
    w = armor_width(n)
    chunks = []
    for r in residues:
        if not 0 <= r < n:
            raise MessageTooLarge(f"residue {r} outside [0, {n})")
        v = r
        digits = []
        for _ in range(w):
            digits.append(v % ARMOR_BASE)
            v //= ARMOR_BASE
        chunks.append("".join(chr(ARMOR_OFFSET + d) for d in reversed(digits)))
    return "".join(chunks)


def dearmor(text: str, n: int) -> list[int]:
    """Inverse of armor; rejects bad lengths, characters, and values >= n."""
    w = armor_width(n)
    if len(text) == 0 or len(text) % w != 0:
        raise MalformedArmor(f"armored length {len(text)} not a positive multiple of {w}")
    residues = []
    for i in range(0, len(text), w):
        v = 0
        for ch in text[i : i + w]:
            code = ord(ch) - ARMOR_OFFSET
            if not 0 <= code < ARMOR_BASE:
                raise MalformedArmor(f"character {ch!r} outside armor alphabet")
            v = v * ARMOR_BASE + code
        if v >= n:
            raise MalformedArmor(f"decoded value {v} >= n = {n}")
        residues.append(v)
    return residues


def save_public_key(key: RsaPublicKey, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"n={key.n}\ne={key.e}\n")


def save_private_key(key: RsaPrivateKey, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"n={key.n}\nd={key.d}\n")


def _parse_kv(text: str, path, *names: str) -> dict[str, int]:
    values: dict[str, int] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        try:
            k, v = ln.split("=", 1)
            values[k.strip()] = int(v)
        except ValueError as exc:
            raise BadConfig(f"{path}: cannot parse line {ln!r}") from exc
    missing = [nm for nm in names if nm not in values]
    if missing:
        raise BadConfig(f"{path}: missing field(s) {', '.join(missing)}")
    return values


def load_public_key(path) -> RsaPublicKey:
    with open(path, "r", encoding="ascii") as fh:
        v = _parse_kv(fh.read(), path, "n", "e")
    if v["n"] < 6:
        raise BadConfig(f"{path}: n = {v['n']} too small for any prime product")
    return RsaPublicKey(e=v["e"], n=v["n"])


def load_private_key(path) -> RsaPrivateKey:
    with open(path, "r", encoding="ascii") as fh:
        v = _parse_kv(fh.read(), path, "n", "d")
    return RsaPrivateKey(d=v["d"], n=v["n"])
