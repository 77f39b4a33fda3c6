"""The Kal1 scheme: cyclic public keys over the Niederreiter engine.

The published matrix is cyclic_t = [rotations of a seed row; identity],
which equals the systematic Niederreiter check_t plus a masking matrix
whose bottom block is zero.  Error vectors are zero on their first k
positions, so the masking term vanishes and ciphertexts decrypt through
the plain Niederreiter chain.  A consequence worth knowing: the
ciphertext equals the constant-weight word itself.  That property is
inherent to the construction and is asserted by the test suite rather
than hidden.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import niederreiter
from .binmat import BinaryMatrix, vec_times_matrix
from .cw import CwParams, cw_decode, cw_encode
from .errors import DimensionMismatch, FormatError, PolicyError, RangeError
from .goppa import CodeParams
from .rng import SeededRng


def rotate_right(v: int, shift: int, width: int) -> int:
    """Cyclic right rotation: position p moves to (p + shift) mod width.

    With position 0 printed leftmost this reads as a right rotation;
    on the int layout it is a left shift with wraparound.
    """
    shift %= width
    if shift == 0:
        return v
    return ((v << shift) | (v >> (width - shift))) & ((1 << width) - 1)


# --- seed-row policies ---


@dataclass(frozen=True)
class DenseSeed:
    """Uniform random seed row."""


@dataclass(frozen=True)
class SparseSeed:
    """Seed row with a fixed number of uniformly placed ones."""

    weight: int


@dataclass(frozen=True)
class RunSeed:
    """Seed row that is a single contiguous run of ones."""

    start: int
    length: int


SeedPolicy = DenseSeed | SparseSeed | RunSeed


def validate_policy(policy: SeedPolicy, redundancy: int) -> None:
    if isinstance(policy, SparseSeed):
        if not 1 <= policy.weight <= min(redundancy, 255):
            raise PolicyError(f"sparse weight must be in [1, {min(redundancy, 255)}]")
    elif isinstance(policy, RunSeed):
        if policy.length < 2:
            raise PolicyError("run length must be at least 2")
        if policy.start < 0 or policy.start + policy.length > redundancy:
            raise PolicyError("run must fit inside the seed row without wrapping")
        # the wire format stores the length in ceil(log2(n-k)) bits
        if policy.length >= 1 << (redundancy - 1).bit_length():
            raise PolicyError("run length does not fit the serialized length field")
    elif not isinstance(policy, DenseSeed):
        raise PolicyError(f"unknown seed policy {policy!r}")


def draw_seed_row(policy: SeedPolicy, redundancy: int, rng: SeededRng) -> int:
    validate_policy(policy, redundancy)
    if isinstance(policy, DenseSeed):
        return rng.randbits(redundancy)
    if isinstance(policy, SparseSeed):
        return sum(1 << i for i in rng.sample(redundancy, policy.weight))
    return ((1 << policy.length) - 1) << policy.start


# --- key material ---


@dataclass
class Kal1PublicKey:
    """Dense form: the seed row itself."""

    params: CodeParams
    seed_row: int

    @property
    def t(self) -> int:
        return self.params.t

    def as_dense(self) -> "Kal1PublicKey":
        return self

    @cached_property
    def expanded(self) -> "ExpandedCyclicKey":
        return expand_cyclic(self)


@dataclass(frozen=True)
class Kal1S1Key:
    """Sparse form: sorted positions of the seed row's ones."""

    params: CodeParams
    positions: tuple[int, ...]

    def __post_init__(self):
        nk = self.params.redundancy
        if list(self.positions) != sorted(set(self.positions)):
            raise FormatError("positions must be strictly increasing")
        if self.positions and not (self.positions[0] >= 0 and self.positions[-1] < nk):
            raise FormatError("position outside the seed row")
        if len(self.positions) > 255:
            raise FormatError("more than 255 positions cannot be serialized")

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def weight(self) -> int:
        return len(self.positions)

    def as_dense(self) -> Kal1PublicKey:
        return Kal1PublicKey(self.params, sum(1 << i for i in self.positions))


@dataclass(frozen=True)
class Kal1S2Key:
    """Run-length form: start and length of a single run of ones."""

    params: CodeParams
    start: int
    run: int

    def __post_init__(self):
        nk = self.params.redundancy
        if self.run < 2:
            raise FormatError("run length must be at least 2")
        if self.start < 0 or self.start + self.run > nk:
            raise FormatError("run overflows the seed row")
        if self.run >= 1 << (nk - 1).bit_length():
            raise FormatError("run length does not fit the serialized length field")

    @property
    def t(self) -> int:
        return self.params.t

    def as_dense(self) -> Kal1PublicKey:
        return Kal1PublicKey(self.params, ((1 << self.run) - 1) << self.start)


@dataclass
class Kal1PrivateKey:
    inner: niederreiter.NiederreiterPrivateKey
    seed_row: int  # kept so the published matrices can be audited

    @property
    def params(self) -> CodeParams:
        return self.inner.params


@dataclass
class ExpandedCyclicKey:
    params: CodeParams
    cyclic_t: BinaryMatrix  # n x (n-k): k rotated rows above an identity


def sparse_form(pk: Kal1PublicKey) -> Kal1S1Key:
    positions = []
    v = pk.seed_row
    while v:
        low = v & -v
        positions.append(low.bit_length() - 1)
        v ^= low
    if len(positions) > 255:
        raise PolicyError("seed row too heavy for the sparse form")
    return Kal1S1Key(pk.params, tuple(positions))


def run_form(pk: Kal1PublicKey) -> Kal1S2Key:
    v = pk.seed_row
    if v == 0:
        raise PolicyError("seed row is all zeros, not a run")
    start = (v & -v).bit_length() - 1
    length = v.bit_length() - start
    if v != ((1 << length) - 1) << start:
        raise PolicyError("seed row is not a single contiguous run")
    if length < 2:
        raise PolicyError("run length must be at least 2")
    return Kal1S2Key(pk.params, start, length)


def expand_cyclic(pk: Kal1PublicKey) -> ExpandedCyclicKey:
    """Materialize the published n x (n-k) matrix from the seed row."""
    params = pk.params
    nk = params.redundancy
    rows = [rotate_right(pk.seed_row, i, nk) for i in range(params.k)]
    rows.extend(1 << r for r in range(nk))
    return ExpandedCyclicKey(params, BinaryMatrix(params.n, nk, rows))


def secondary_check_t(expanded: ExpandedCyclicKey, inner_pub: niederreiter.NiederreiterPublicKey) -> BinaryMatrix:
    """Masking matrix: cyclic_t plus check_t; its bottom block is zero."""
    return expanded.cyclic_t.add(inner_pub.check_t)


def cw_params(params: CodeParams) -> CwParams:
    return CwParams(params.redundancy, params.t)


def keygen(
    params: CodeParams, policy: SeedPolicy, rng: SeededRng
) -> tuple[Kal1PublicKey, Kal1PrivateKey]:
    """Inner Niederreiter keygen, then a seed row drawn per policy.

    The draw order (support, Goppa polynomial, permutations, seed row)
    is pinned: private key files regenerate from the 16-byte seed alone.
    """
    validate_policy(policy, params.redundancy)
    _, inner_priv = niederreiter.keygen(params, rng)
    seed_row = draw_seed_row(policy, params.redundancy, rng)
    return Kal1PublicKey(params, seed_row), Kal1PrivateKey(inner_priv, seed_row)


def encrypt(pk: Kal1PublicKey, msg: int) -> int:
    """Map the message to a weight-t word, zero-pad, multiply."""
    params = pk.params
    word = cw_encode(msg, cw_params(params))
    e = word << params.k
    return vec_times_matrix(e, pk.expanded.cyclic_t)


def decrypt_with(inner: niederreiter.NiederreiterPrivateKey, c: int) -> int:
    """Niederreiter decryption plus the structural checks.

    The recovered error must be zero on its first k positions and have
    weight exactly t; anything else marks a forged or damaged
    ciphertext and raises FormatError.
    """
    params = inner.params
    if c.bit_length() > params.redundancy:
        raise DimensionMismatch("ciphertext longer than n-k bits")
    e = niederreiter.decrypt(inner, c)
    if e & ((1 << params.k) - 1):
        raise FormatError("decoded error touches the zero prefix")
    word = e >> params.k
    if word.bit_count() != params.t:
        raise FormatError(f"decoded word weight {word.bit_count()} != {params.t}")
    try:
        return cw_decode(word, cw_params(params))
    except RangeError as exc:
        raise FormatError("decoded word outside the usable message space") from exc


def decrypt(sk: Kal1PrivateKey, c: int) -> int:
    return decrypt_with(sk.inner, c)
