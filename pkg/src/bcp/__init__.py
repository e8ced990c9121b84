"""Confidential, authenticated transfer of small binary payloads over a
simulated low-bandwidth unreliable channel.

Pipeline: bytes -> decimal digits -> arithmetic coding -> blockwise
textbook RSA -> ASCII armor -> framed with an arithmetic authentication
code and a Diffie-Hellman public value -> lossy channel -> verification
and the inverse path.

Everything here is desk-scale protocol modeling.  None of it is secure
by modern standards: the RSA is unpadded and deterministic, the DH
exchange is unauthenticated, the authentication code is message
independent, and the registry stores passwords in the clear.
"""

from .auth import Registry, UserRecord, mac, verify
from .channel import ChannelConfig, Delivery, expected_flip_count, transmit
from .codec import ProbabilityModel, arith_decode, arith_encode, decimalize, dedecimalize
from .dh import DhParams, dh_public, dh_shared
from .errors import BcpError
from .pipeline import Accepted, Discarded, SessionConfig, TraceReport, receive, send
from .rsa2 import RsaKeyPair, RsaPrivateKey, RsaPublicKey, keygen
from .wire import Frame, assemble_frame, parse_frame

__version__ = "0.1.0"

__all__ = [
    "Accepted",
    "BcpError",
    "ChannelConfig",
    "Delivery",
    "DhParams",
    "Discarded",
    "Frame",
    "ProbabilityModel",
    "Registry",
    "RsaKeyPair",
    "RsaPrivateKey",
    "RsaPublicKey",
    "SessionConfig",
    "TraceReport",
    "UserRecord",
    "arith_decode",
    "arith_encode",
    "assemble_frame",
    "decimalize",
    "dedecimalize",
    "dh_public",
    "dh_shared",
    "expected_flip_count",
    "keygen",
    "mac",
    "parse_frame",
    "receive",
    "send",
    "transmit",
    "verify",
]
