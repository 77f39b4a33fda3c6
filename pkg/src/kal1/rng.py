"""Deterministic byte stream for reproducible key material.

Fixtures and KAT files depend on the exact generator, so it is pinned
here: the stream is the AES-128-CTR keystream under the 16-byte seed
as key, counter blocks 0, 1, 2, ... encoded as 16-byte big-endian
integers.  Derived draws are defined on top of the raw stream:

* ``read(n)``      next n bytes of the keystream.
* ``randbits(k)``  read ceil(k/8) bytes, big-endian integer, masked
                   to the low k bits.
* ``randbelow(n)`` rejection-sample ``randbits((n-1).bit_length())``
                   until the value is below n.
* ``permutation(n)``  Fisher-Yates over [0, n): for i from n-1 down
                   to 1, swap positions i and ``randbelow(i+1)``.
* ``sample(n, k)`` partial Fisher-Yates: for i in 0..k-1 swap
                   positions i and i + ``randbelow(n-i)``; return the
                   first k entries.

Any change to these rules invalidates every stored fixture.
"""

from __future__ import annotations

import os

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

SEED_BYTES = 16


def fresh_seed() -> bytes:
    """A 16-byte seed from the system entropy source."""
    return os.urandom(SEED_BYTES)


class SeededRng:
    """AES-128-CTR keystream generator; single-owner, not thread safe."""

    def __init__(self, seed: bytes):
        if len(seed) != SEED_BYTES:
            raise ValueError(f"seed must be exactly {SEED_BYTES} bytes, got {len(seed)}")
        self.seed = bytes(seed)
        self._stream = Cipher(
            algorithms.AES(self.seed), modes.CTR(bytes(SEED_BYTES))
        ).encryptor()

    def read(self, nbytes: int) -> bytes:
        return self._stream.update(bytes(nbytes))

    def randbits(self, k: int) -> int:
        if k < 0:
            raise ValueError("bit count must be non-negative")
        if k == 0:
            return 0
        raw = int.from_bytes(self.read((k + 7) // 8), "big")
        return raw & ((1 << k) - 1)

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("bound must be positive")
        k = (n - 1).bit_length()
        while True:
            v = self.randbits(k)
            if v < n:
                return v

    def permutation(self, n: int) -> list[int]:
        arr = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.randbelow(i + 1)
            arr[i], arr[j] = arr[j], arr[i]
        return arr

    def sample(self, n: int, k: int) -> list[int]:
        """k distinct values from [0, n), order-sensitive and pinned."""
        if not 0 <= k <= n:
            raise ValueError("sample size out of range")
        arr = list(range(n))
        for i in range(k):
            j = i + self.randbelow(n - i)
            arr[i], arr[j] = arr[j], arr[i]
        return arr[:k]
