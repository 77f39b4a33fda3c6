"""Constant-weight codec against a full-enumeration colex oracle."""

from itertools import combinations
from math import comb

import pytest

from kal1.cw import CwParams, cw_decode, cw_encode
from kal1.errors import DimensionMismatch, ParameterError, RangeError, WeightError


def colex_order(length: int, weight: int):
    """Oracle: all supports sorted colexicographically."""
    return sorted(combinations(range(length), weight), key=lambda s: tuple(reversed(s)))


def word_of(support) -> int:
    return sum(1 << c for c in support)


def test_params_validation():
    with pytest.raises(ParameterError):
        CwParams(0, 0)
    with pytest.raises(ParameterError):
        CwParams(4, 5)
    p = CwParams(8, 2)
    assert p.capacity == comb(8, 2) == 28
    assert p.msg_bits == 4


def test_encode_examples():
    p = CwParams(8, 2)
    assert cw_encode(0, p) == word_of({0, 1})
    assert cw_encode(27, p) == word_of({6, 7})
    # weight == length: single word, all ones
    p_full = CwParams(5, 5)
    assert p_full.capacity == 1 and p_full.msg_bits == 0
    assert cw_encode(0, p_full) == 0b11111


def test_decode_examples():
    p = CwParams(8, 2)
    assert cw_decode(word_of({0, 1}), p) == 0
    with pytest.raises(WeightError):
        cw_decode(1, p)
    with pytest.raises(WeightError):
        cw_decode(0b111, p)
    with pytest.raises(DimensionMismatch):
        cw_decode(1 << 8 | 1, p)


def test_encode_range_errors():
    p = CwParams(8, 2)
    with pytest.raises(RangeError):
        cw_encode(28, p)
    with pytest.raises(RangeError):
        cw_encode(-1, p)
    # {3, 7} has colex rank C(3,1) + C(7,2) = 24 >= 2^4: outside the
    # usable message space even though the weight is right
    with pytest.raises(RangeError):
        cw_decode(word_of({3, 7}), p)


def test_round_trip_all_messages_toy():
    p = CwParams(8, 2)
    seen = set()
    for msg in range(1 << p.msg_bits):
        word = cw_encode(msg, p)
        assert word.bit_count() == 2
        assert word not in seen
        seen.add(word)
        assert cw_decode(word, p) == msg


def test_bijectivity_exhaustive_small_params():
    for length in range(1, 17):
        for weight in range(0, min(4, length) + 1):
            p = CwParams(length, weight)
            order = colex_order(length, weight)
            seen = set()
            for rank, supp in enumerate(order):
                word = word_of(supp)
                assert cw_encode(rank, p) == word
                assert word not in seen
                seen.add(word)
                if rank < (1 << p.msg_bits):
                    assert cw_decode(word, p) == rank
            assert len(seen) == p.capacity


def test_monotonicity_matches_integer_order():
    p = CwParams(10, 3)
    prev = -1
    for rank, supp in enumerate(colex_order(10, 3)):
        assert cw_encode(rank, p) == word_of(supp)
        assert rank == prev + 1
        prev = rank


def test_output_weight_always_exact():
    for length, weight in ((12, 3), (16, 4), (9, 2)):
        p = CwParams(length, weight)
        for msg in range(0, 1 << p.msg_bits, 7):
            assert cw_encode(msg, p).bit_count() == weight
