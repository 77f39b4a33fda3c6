"""Exception types shared across the package."""


class Kal1Error(Exception):
    """Base class for all library errors."""


class ParameterError(Kal1Error):
    """Invalid or inconsistent code parameters."""


class DimensionMismatch(Kal1Error):
    """Operands have incompatible shapes or lengths."""


class SingularMatrixError(Kal1Error):
    """Inversion attempted on a rank-deficient matrix."""


class GenerationFailure(Kal1Error):
    """Key generation exhausted its resampling budget."""


class DecodingFailure(Kal1Error):
    """No error vector of acceptable weight matches the syndrome."""


class WeightError(Kal1Error):
    """Vector does not have the required Hamming weight."""


class RangeError(Kal1Error):
    """Integer outside the usable message or rank range."""


class FormatError(Kal1Error):
    """Malformed serialized key, ciphertext or KAT record."""


class PolicyError(Kal1Error):
    """Seed-row policy inconsistent with the code parameters."""


class KatMismatch(Kal1Error):
    """A KAT record did not reproduce."""

    def __init__(self, record: int, field: str, expected: str, actual: str):
        super().__init__(f"record {record}: {field} expected {expected}, got {actual}")
        self.record = record
        self.field = field
        self.expected = expected
        self.actual = actual
