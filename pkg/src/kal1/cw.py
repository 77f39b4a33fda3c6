"""Constant-weight word codec.

Bijection between message integers and binary words of fixed length
and Hamming weight, by colexicographic combinadics: the word with
support {c_1 < c_2 < ... < c_w} has rank sum_j C(c_j, j).  Rank order
therefore matches integer order, and the usable message space is the
largest power of two not exceeding C(length, weight).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DimensionMismatch, ParameterError, RangeError, WeightError


@dataclass(frozen=True)
class CwParams:
    length: int
    weight: int

    def __post_init__(self):
        if self.length < 1:
            raise ParameterError("length must be at least 1")
        if not 0 <= self.weight <= self.length:
            raise ParameterError("weight must lie in [0, length]")

    @property
    def capacity(self) -> int:
        """Number of words, C(length, weight)."""
        return self._binom[self.length][self.weight]

    @property
    def msg_bits(self) -> int:
        """floor(log2(capacity)): the usable message width in bits."""
        return self.capacity.bit_length() - 1

    @cached_property
    def _binom(self) -> list[list[int]]:
        # Pascal triangle clipped to the weight, computed once per params
        table = [[0] * (self.weight + 1) for _ in range(self.length + 1)]
        for c in range(self.length + 1):
            table[c][0] = 1
            for j in range(1, min(c, self.weight) + 1):
                table[c][j] = table[c - 1][j - 1] + table[c - 1][j]
        return table


def cw_encode(msg: int, p: CwParams) -> int:
    """Map a message integer to its weight-p.weight word (as an int).

    Accepts any rank below the full capacity; messages meant to round
    trip must stay below 2^msg_bits, which cw_decode enforces.
    """
    if not 0 <= msg < p.capacity:
        raise RangeError(f"rank must be below C({p.length}, {p.weight}) = {p.capacity}")
    binom = p._binom
    rank = msg
    v = 0
    for j in range(p.weight, 0, -1):
        # largest c with C(c, j) <= rank; supports are strictly decreasing
        c = j - 1
        while c + 1 <= p.length - 1 and binom[c + 1][j] <= rank:
            c += 1
        v |= 1 << c
        rank -= binom[c][j]
    return v


def cw_decode(word: int, p: CwParams) -> int:
    """Colex rank of the word's support; inverse of cw_encode."""
    if word.bit_length() > p.length:
        raise DimensionMismatch(f"word longer than {p.length} bits")
    if word.bit_count() != p.weight:
        raise WeightError(f"word weight {word.bit_count()} != {p.weight}")
    binom = p._binom
    rank = 0
    j = 1
    v = word
    while v:
        low = v & -v
        rank += binom[low.bit_length() - 1][j]
        j += 1
        v ^= low
    if rank >= (1 << p.msg_bits):
        raise RangeError("word lies outside the usable message space")
    return rank
