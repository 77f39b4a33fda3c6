"""Kal1: a short-public-key variant of the Niederreiter cryptosystem.

Library layout: gf2m (field arithmetic), binmat (GF(2) linear algebra),
goppa (codes and Patterson decoding), cw (constant-weight codec),
niederreiter (baseline scheme), scheme (Kal1 itself), keyio (wire
formats and KATs), isd (Prange probe and rank checks), cli.
"""

from .cw import CwParams, cw_decode, cw_encode
from .errors import (
    DecodingFailure,
    DimensionMismatch,
    FormatError,
    GenerationFailure,
    Kal1Error,
    KatMismatch,
    ParameterError,
    PolicyError,
    RangeError,
    SingularMatrixError,
    WeightError,
)
from .goppa import CodeParams, GoppaCode, generate_code
from .rng import SeededRng, fresh_seed
from .scheme import (
    DenseSeed,
    ExpandedCyclicKey,
    Kal1PrivateKey,
    Kal1PublicKey,
    Kal1S1Key,
    Kal1S2Key,
    RunSeed,
    SparseSeed,
    decrypt,
    encrypt,
    expand_cyclic,
    keygen,
)

__version__ = "0.1.0"

__all__ = [
    "CodeParams",
    "CwParams",
    "DecodingFailure",
    "DenseSeed",
    "DimensionMismatch",
    "ExpandedCyclicKey",
    "FormatError",
    "GenerationFailure",
    "GoppaCode",
    "Kal1Error",
    "Kal1PrivateKey",
    "Kal1PublicKey",
    "Kal1S1Key",
    "Kal1S2Key",
    "KatMismatch",
    "ParameterError",
    "PolicyError",
    "RangeError",
    "RunSeed",
    "SeededRng",
    "SingularMatrixError",
    "SparseSeed",
    "WeightError",
    "cw_decode",
    "cw_encode",
    "decrypt",
    "encrypt",
    "expand_cyclic",
    "fresh_seed",
    "generate_code",
    "keygen",
    "__version__",
]
