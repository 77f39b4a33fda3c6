"""Baseline Niederreiter scheme over binary Goppa codes.

The public key is the transposed systematic parity check: the
scrambler is derived from (code, permutation) so that the scrambled,
permuted check matrix ends in an identity block on its last n-k
columns.  That systematic form is what makes the cyclic construction
in the scheme module cancel correctly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binmat import (
    BinaryMatrix,
    Permutation,
    Scrambler,
    matrix_times_vec,
    random_permutation,
    vec_times_matrix,
)
from .errors import DimensionMismatch, GenerationFailure, SingularMatrixError, WeightError
from .goppa import RESAMPLE_LIMIT, CodeParams, GoppaCode, generate_code
from .rng import SeededRng


@dataclass
class NiederreiterPublicKey:
    params: CodeParams
    check_t: BinaryMatrix  # n x (n-k); bottom (n-k) rows are the identity

    @property
    def t(self) -> int:
        return self.params.t


@dataclass
class NiederreiterPrivateKey:
    code: GoppaCode
    scrambler: Scrambler  # (n-k) x (n-k)
    perm: Permutation  # length n

    @property
    def params(self) -> CodeParams:
        return self.code.params


def _systematize(binary_check: BinaryMatrix, perm: Permutation, k: int):
    """Scramble the column-permuted check into [A | I] form.

    The scrambler is the inverse of the last (n-k) columns of the
    permuted check; raises SingularMatrixError when that block is not
    invertible.
    """
    permuted = binary_check.permute_columns(perm)
    nk = binary_check.rows
    right = BinaryMatrix(nk, nk, [row >> k for row in permuted.row_ints])
    s = right.invert()
    scrambled = s.mul(permuted)
    return Scrambler(s, right), scrambled


def keygen(params: CodeParams, rng: SeededRng) -> tuple[NiederreiterPublicKey, NiederreiterPrivateKey]:
    """Sample a code and a permutation giving a systematic public key.

    Permutations whose right block is singular are redrawn, up to the
    shared resample limit.
    """
    code = generate_code(params, rng)
    binary = code.parity_check().binary
    for _ in range(RESAMPLE_LIMIT):
        perm = random_permutation(params.n, rng)
        try:
            scrambler, scrambled = _systematize(binary, perm, params.k)
        except SingularMatrixError:
            continue
        pub = NiederreiterPublicKey(params, scrambled.transpose())
        priv = NiederreiterPrivateKey(code, scrambler, perm)
        return pub, priv
    raise GenerationFailure("no permutation yielded an invertible right block")


def public_key(priv: NiederreiterPrivateKey) -> NiederreiterPublicKey:
    """Rebuild the public key from private material."""
    permuted = priv.code.parity_check().binary.permute_columns(priv.perm)
    return NiederreiterPublicKey(priv.params, priv.scrambler.s.mul(permuted).transpose())


def encrypt(pub: NiederreiterPublicKey, e: int) -> int:
    """Syndrome of a weight-t error vector under the public check."""
    params = pub.params
    if e.bit_length() > params.n:
        raise DimensionMismatch("error vector longer than the code length")
    if e.bit_count() != params.t:
        raise WeightError(f"error vector must have weight {params.t}")
    return vec_times_matrix(e, pub.check_t)


def decrypt(priv: NiederreiterPrivateKey, c: int) -> int:
    """Recover the error vector: unscramble, decode, unpermute."""
    params = priv.params
    if c.bit_length() > params.redundancy:
        raise DimensionMismatch("ciphertext longer than n-k bits")
    inner_syndrome = matrix_times_vec(priv.scrambler.s_inv, c)
    permuted_error = priv.code.decode(inner_syndrome)
    return priv.perm.apply(permuted_error, inverse=True)
