"""Diffie-Hellman over a small prime modulus.

The exchanged public value rides in the frame header; the derived shared
secret is a session token both ends recompute and compare, it does not
key the RSA step.  The exchange is unauthenticated and therefore open to
man-in-the-middle interposition; that weakness is inherited from the
protocol being modeled and is not mitigated here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadConfig, BadExponent, BadPublicValue, NotPrime
from .rsa2 import _parse_kv, is_prime


@dataclass(frozen=True)
class DhParams:
    p: int
    g: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrime(f"DH modulus {self.p} is not prime")
        if not 1 < self.g < self.p:
            raise BadConfig(f"generator {self.g} outside (1, {self.p})")


@dataclass(frozen=True)
class DhKeyPair:
    params: DhParams
    private_exponent: int
    public_value: int


def dh_public(params: DhParams, exponent: int) -> int:
    if not 1 <= exponent <= params.p - 2:
        raise BadExponent(f"exponent {exponent} outside [1, {params.p - 2}]")
    return pow(params.g, exponent, params.p)


def dh_keypair(params: DhParams, exponent: int) -> DhKeyPair:
    return DhKeyPair(params, exponent, dh_public(params, exponent))


def dh_shared(params: DhParams, own_exponent: int, peer_public: int) -> int:
    if not 1 <= own_exponent <= params.p - 2:
        raise BadExponent(f"exponent {own_exponent} outside [1, {params.p - 2}]")
    if not 1 <= peer_public <= params.p - 1:
        raise BadPublicValue(f"public value {peer_public} outside [1, {params.p - 1}]")
    return pow(peer_public, own_exponent, params.p)


def exponent_from_seed(params: DhParams, seed: int) -> int:
    """Deterministic exponent in [1, P-2] from a seed; no system entropy."""
    from ._chanrng import mix64

    return 1 + mix64(seed) % (params.p - 2)


def save_params(params: DhParams, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"P={params.p}\nG={params.g}\n")


def load_params(path) -> DhParams:
    with open(path, "r", encoding="ascii") as fh:
        v = _parse_kv(fh.read(), path, "P", "G")
    return DhParams(p=v["P"], g=v["G"])


def save_keypair(pair: DhKeyPair, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"exponent={pair.private_exponent}\npublic={pair.public_value}\n")


def load_keypair(params: DhParams, path) -> DhKeyPair:
    with open(path, "r", encoding="ascii") as fh:
        v = _parse_kv(fh.read(), path, "exponent", "public")
    pair = dh_keypair(params, v["exponent"])
    if pair.public_value != v["public"]:
        raise BadConfig(f"{path}: stored public value does not match exponent")
    return pair
