"""End-to-end sender and receiver paths.

The send path: digits -> arithmetic code fraction -> fixed-width blocks
-> RSA-encrypted residues -> ASCII armor -> frame, with the
authentication code and the sender's DH public value in the header.

The receive path gates on the authentication code first and only then
unwinds the payload.  Any stage failure after the gate is reported as a
classified discard, never an uncaught exception.

Byte payloads travel through decimalize/dedecimalize (3 digits per
byte); send_digits/receive_digits expose the digit-level pipeline
directly, which the diagnostic trace uses for digit strings that no
byte payload can produce.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import auth, codec, dh, rsa2, wire
from .errors import BcpError, InvalidInput

MAC_MISMATCH = "MacMismatch"
MALFORMED_PAYLOAD = "MalformedPayload"


@dataclass(frozen=True)
class SessionConfig:
    """Pre-shared session state, established at registration time.

    Only the DH public value travels in-band; the probability model,
    RSA keys, DH parameters, and the receiver's credentials are known
    to both ends beforehand.  rsa_private may be None on the sender
    side.
    """

    probability_model: codec.ProbabilityModel
    rsa_public: rsa2.RsaPublicKey
    dh_params: dh.DhParams
    receiver_record: auth.UserRecord
    rsa_private: rsa2.RsaPrivateKey | None = None

    def __post_init__(self) -> None:
        if self.rsa_public.n < 10:
            raise InvalidInput(f"session modulus {self.rsa_public.n} < 10")


@dataclass
class TraceReport:
    """Per-stage intermediate values of one send, in pipeline order."""

    decimal_plaintext: str = ""
    code_fraction: str = ""
    plain_residues: list[int] = field(default_factory=list)
    pad_count: int = 0
    cipher_residues: list[int] = field(default_factory=list)
    armored: str = ""
    mac: int = 0
    dh_public: int = 0
    shared_secret: int | None = None
    frame_bytes: bytes = b""

    def lines(self) -> list[str]:
        out = [
            f"decimal plaintext: {self.decimal_plaintext}",
            f"arithmetic code fraction: {self.code_fraction}",
            f"plain residues: {self.plain_residues} (pad {self.pad_count})",
            f"cipher residues: {self.cipher_residues}",
            f"armored ciphertext: {self.armored}",
            f"authentication code: {self.mac}",
            f"dh public value: {self.dh_public}",
        ]
        if self.shared_secret is not None:
            out.append(f"shared secret: {self.shared_secret}")
        out.append(f"frame: {self.frame_bytes.decode('ascii')}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines()) + "\n"


@dataclass(frozen=True)
class Accepted:
    payload: bytes
    shared_secret: int


@dataclass(frozen=True)
class Discarded:
    reason: str  # MAC_MISMATCH or MALFORMED_PAYLOAD
    stage: str = ""
    detail: str = ""


def send_digits(
    digits: str,
    cfg: SessionConfig,
    sender_dh_exponent: int,
    peer_dh_public: int | None = None,
) -> tuple[wire.Frame, TraceReport]:
    """Digit-level send path; symbol_count is len(digits)."""
    n = cfg.rsa_public.n
    fraction = codec.arith_encode(digits, cfg.probability_model)
    residues, pad = rsa2.block(fraction, n)
    cipher = [rsa2.encrypt_block(m, cfg.rsa_public) for m in residues]
    armored = rsa2.armor(cipher, n)
    rec = cfg.receiver_record
    code = auth.mac(rec.user_id, rec.password, n)
    public = dh.dh_public(cfg.dh_params, sender_dh_exponent)
    frame = wire.Frame(
        mac=code,
        dh_public=public,
        symbol_count=len(digits),
        fraction_length=len(fraction),
        pad_count=pad,
        armored_payload=armored,
    )
    trace = TraceReport(
        decimal_plaintext=digits,
        code_fraction=fraction,
        plain_residues=residues,
        pad_count=pad,
        cipher_residues=cipher,
        armored=armored,
        mac=code,
        dh_public=public,
        frame_bytes=wire.assemble_frame(frame),
    )
    if peer_dh_public is not None:
        trace.shared_secret = dh.dh_shared(cfg.dh_params, sender_dh_exponent, peer_dh_public)
    return frame, trace


def send(
    payload: bytes,
    cfg: SessionConfig,
    sender_dh_exponent: int,
    peer_dh_public: int | None = None,
) -> tuple[wire.Frame, TraceReport]:
    return send_digits(codec.decimalize(payload), cfg, sender_dh_exponent, peer_dh_public)


def receive_digits(
    frame: wire.Frame, cfg: SessionConfig, receiver_dh_exponent: int
) -> tuple[str, int] | Discarded:
    """Digit-level receive path: (digits, shared_secret) or a Discarded."""
    if cfg.rsa_private is None:
        raise InvalidInput("receiver session needs the private key")
    n = cfg.rsa_public.n
    rec = cfg.receiver_record
    if not auth.verify(frame.mac, rec.user_id, rec.password, n):
        return Discarded(MAC_MISMATCH)
    stage = "dh"
    try:
        secret = dh.dh_shared(cfg.dh_params, receiver_dh_exponent, frame.dh_public)
        stage = "dearmor"
        cipher = rsa2.dearmor(frame.armored_payload, n)
        stage = "decrypt"
        plain = [rsa2.decrypt_block(c, cfg.rsa_private) for c in cipher]
        stage = "unblock"
        fraction = rsa2.unblock(plain, frame.pad_count, frame.fraction_length, n)
        stage = "arith_decode"
        digits = codec.arith_decode(fraction, frame.symbol_count, cfg.probability_model)
    except BcpError as exc:
        return Discarded(MALFORMED_PAYLOAD, stage=stage, detail=str(exc))
    return digits, secret


def receive(
    frame: wire.Frame, cfg: SessionConfig, receiver_dh_exponent: int
) -> Accepted | Discarded:
    result = receive_digits(frame, cfg, receiver_dh_exponent)
    if isinstance(result, Discarded):
        return result
    digits, secret = result
    try:
        payload = codec.dedecimalize(digits)
    except BcpError as exc:
        return Discarded(MALFORMED_PAYLOAD, stage="dedecimalize", detail=str(exc))
    return Accepted(payload, secret)
