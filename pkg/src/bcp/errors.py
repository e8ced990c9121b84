"""Exception hierarchy for the whole package.

Every operational failure raises a subclass of BcpError so callers
(and the CLI) can catch one base type.  Precondition violations on
programmer-facing APIs raise the specific subclass named in each
operation's contract.
"""


class BcpError(Exception):
    """Base class for all package errors."""


# codec
class InvalidInput(BcpError):
    """Payload or digit-string argument violates a precondition."""


class MalformedDigits(BcpError):
    """Digit string cannot be mapped back to bytes."""


class MalformedFraction(BcpError):
    """Code fraction is not a decimal fraction in [0, 1)."""


class InvalidModel(BcpError):
    """Probability model fails validation (non-positive entry, sum != 1)."""


# rsa2
class NotPrime(BcpError):
    """A claimed prime failed trial division."""


class BadExponent(BcpError):
    """Exponent out of range or not invertible."""


class DegenerateModulus(BcpError):
    """P == Q: modulus would leak its factorization trivially."""


class ModulusTooSmall(BcpError):
    """Modulus below 10 leaves no room for even one decimal digit."""


class MessageTooLarge(BcpError):
    """Plaintext residue >= n."""


class CiphertextTooLarge(BcpError):
    """Ciphertext residue >= n."""


class BlockOverflow(BcpError):
    """Decrypted residue has more digits than a block: wrong key."""


class MalformedArmor(BcpError):
    """Armored text has bad length, alphabet, or decodes >= n."""


# dh
class BadPublicValue(BcpError):
    """Peer public value outside [1, P-1]."""


# auth
class AlreadyRegistered(BcpError):
    """user_id already present in the registry."""


class InvalidCredential(BcpError):
    """ID or password is not a positive integer."""


# wire
class BadMagic(BcpError):
    """Frame does not start with the protocol magic."""


class Truncated(BcpError):
    """Frame ends before all header fields are present."""


class MalformedField(BcpError):
    """A numeric header field is not a decimal integer."""


# config files
class BadConfig(BcpError):
    """A key, model, parameter, or channel file failed to parse."""
