"""Bit-vector helpers.

Vectors live in plain ints: bit i of the int is vector position i.
Serialized form is MSB-first: position 0 maps to the most significant
bit of the first byte, and padding bits up to the byte boundary are
zero.  When a vector is rendered as a string, position 0 is leftmost.
"""

from __future__ import annotations

# Bit-reversal of a single byte, used to swap between the int layout
# (bit i = position i) and the MSB-first wire layout.
_REV8 = bytes(int(f"{i:08b}"[::-1], 2) for i in range(256))


def reverse_bits(value: int, nbits: int) -> int:
    """Reverse an nbits-wide value: bit i moves to bit nbits-1-i."""
    nbytes = (nbits + 7) // 8
    le = value.to_bytes(nbytes, "little")
    rev = int.from_bytes(bytes(_REV8[b] for b in le), "big")
    return rev >> (8 * nbytes - nbits)


def pack_bits(value: int, nbits: int) -> bytes:
    """Pack an nbits vector into MSB-first bytes (position 0 first)."""
    nbytes = (nbits + 7) // 8
    le = value.to_bytes(nbytes, "little")
    return bytes(_REV8[b] for b in le)


def unpack_bits(data: bytes, nbits: int) -> int:
    """Inverse of pack_bits; the caller checks length and padding."""
    value = int.from_bytes(bytes(_REV8[b] for b in data), "little")
    return value


def bit_string(value: int, nbits: int) -> str:
    """Render a vector with position 0 leftmost."""
    return "".join("1" if (value >> i) & 1 else "0" for i in range(nbits))
