"""Registration and the arithmetic authentication code.

The code is (ID * Password) mod N with N the session's RSA modulus.  It
binds the parties, not the payload: the same pair always yields the same
code regardless of the message, so it offers no payload integrity.  The
registry stores credentials in the clear in a plain text file; both
properties are faithful to the protocol being modeled and are documented
weaknesses, not bugs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import AlreadyRegistered, BadConfig, InvalidCredential


@dataclass(frozen=True)
class UserRecord:
    user_id: int
    password: int


def mac(user_id: int, password: int, n: int) -> int:
    """(ID * Password) mod N."""
    if user_id < 1 or password < 1 or n < 1:
        raise InvalidCredential("user_id, password, and n must all be >= 1")
    return (user_id * password) % n


def verify(received_mac: int, user_id: int, password: int, n: int) -> bool:
    """True = accept, False = discard.  Mismatch is an outcome, not an error."""
    return received_mac == mac(user_id, password, n)


def credential_to_int(text: str) -> int:
    """Map a CLI credential to a positive integer.

    Decimal strings pass through; anything else is read as its ASCII
    bytes in base 256 so textual IDs and passwords stay usable.
    """
    if text.isdigit():
        value = int(text)
    else:
        value = int.from_bytes(text.encode("utf-8"), "big")
    return value


class Registry:
    """File-backed user registry, one "user_id:password" line per record.

    Mutations rewrite the file atomically; in-memory and on-disk state
    agree after every successful call.  Single writer, any readers.
    """

    def __init__(self, path):
        self.path = path
        self._records: dict[int, UserRecord] = {}
        if os.path.exists(path):
            self._load()

    def _load(self) -> None:
        with open(self.path, "r", encoding="ascii") as fh:
            for lineno, ln in enumerate(fh, 1):
                ln = ln.strip()
                if not ln:
                    continue
                try:
                    uid, pw = ln.split(":", 1)
                    rec = UserRecord(int(uid), int(pw))
                except ValueError as exc:
                    raise BadConfig(f"{self.path}:{lineno}: bad record {ln!r}") from exc
                self._records[rec.user_id] = rec

    def _flush(self) -> None:
        tmp = f"{self.path}.tmp"
        with open(tmp, "w", encoding="ascii") as fh:
            for rec in sorted(self._records.values(), key=lambda r: r.user_id):
                fh.write(f"{rec.user_id}:{rec.password}\n")
        os.replace(tmp, self.path)

    def register(self, user_id: int, password: int) -> UserRecord:
        if user_id < 1 or password < 1:
            raise InvalidCredential("user_id and password must be >= 1")
        if user_id in self._records:
            raise AlreadyRegistered(f"user_id {user_id} already registered")
        rec = UserRecord(user_id, password)
        self._records[user_id] = rec
        self._flush()
        return rec

    def get(self, user_id: int) -> UserRecord:
        try:
            return self._records[user_id]
        except KeyError:
            raise BadConfig(f"user_id {user_id} not in registry {self.path}") from None

    def __contains__(self, user_id: int) -> bool:
        return user_id in self._records

    def __len__(self) -> int:
        return len(self._records)
