"""Bit-packed linear algebra over GF(2).

A matrix stores its rows as ints: bit j of a row is column j, and bits
at or above the column count stay zero.  Matrices are treated as
immutable values; every operation returns a fresh matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, SingularMatrixError
from .rng import SeededRng


class BinaryMatrix:
    __slots__ = ("rows", "cols", "row_ints")

    def __init__(self, rows: int, cols: int, row_ints: list[int] | None = None):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("negative dimension")
        if row_ints is None:
            row_ints = [0] * rows
        if len(row_ints) != rows:
            raise DimensionMismatch(f"expected {rows} rows, got {len(row_ints)}")
        mask = (1 << cols) - 1
        for r in row_ints:
            if r & ~mask:
                raise DimensionMismatch("row has bits beyond the column count")
        self.rows = rows
        self.cols = cols
        self.row_ints = list(row_ints)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_dense(cls, entries: list[list[int]]) -> "BinaryMatrix":
        rows = len(entries)
        cols = len(entries[0]) if entries else 0
        ints = [sum((row[j] & 1) << j for j in range(cols)) for row in entries]
        return cls(rows, cols, ints)

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.row_ints]

    def get(self, i: int, j: int) -> int:
        return (self.row_ints[i] >> j) & 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.row_ints == other.row_ints
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.row_ints)))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"

    def add(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        return BinaryMatrix(
            self.rows, self.cols, [a ^ b for a, b in zip(self.row_ints, other.row_ints)]
        )

    def mul(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        orows = other.row_ints
        out = []
        for row in self.row_ints:
            acc = 0
            r = row
            while r:
                low = r & -r
                acc ^= orows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return BinaryMatrix(self.rows, other.cols, out)

    def transpose(self) -> "BinaryMatrix":
        out = [0] * self.cols
        for i, row in enumerate(self.row_ints):
            bit = 1 << i
            r = row
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= bit
                r ^= low
        return BinaryMatrix(self.cols, self.rows, out)

    def rank(self) -> int:
        # incremental reduction against a basis keyed by leading bit
        basis: dict[int, int] = {}
        rank = 0
        for row in self.row_ints:
            cur = row
            while cur:
                top = cur.bit_length() - 1
                other = basis.get(top)
                if other is None:
                    basis[top] = cur
                    rank += 1
                    break
                cur ^= other
        return rank

    def invert(self) -> "BinaryMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices can be inverted")
        n = self.rows
        aug = [self.row_ints[i] | (1 << (n + i)) for i in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if (aug[r] >> col) & 1:
                    piv = r
                    break
            if piv is None:
                raise SingularMatrixError(f"matrix is singular at column {col}")
            aug[col], aug[piv] = aug[piv], aug[col]
            prow = aug[col]
            for r in range(n):
                if r != col and (aug[r] >> col) & 1:
                    aug[r] ^= prow
        return BinaryMatrix(n, n, [row >> n for row in aug])

    def columns(self, idxs: list[int]) -> "BinaryMatrix":
        """New matrix keeping the given columns, in the given order."""
        out = []
        for row in self.row_ints:
            acc = 0
            for j, c in enumerate(idxs):
                if (row >> c) & 1:
                    acc |= 1 << j
            out.append(acc)
        return BinaryMatrix(self.rows, len(idxs), out)

    def permute_columns(self, perm: "Permutation") -> "BinaryMatrix":
        """Product with the permutation matrix: column i moves to perm.map[i]."""
        if len(perm.map) != self.cols:
            raise DimensionMismatch("permutation length must match column count")
        return BinaryMatrix(
            self.rows, self.cols, [perm.apply(row, inverse=True) for row in self.row_ints]
        )


def vec_times_matrix(v: int, m: BinaryMatrix) -> int:
    """Row vector (m.rows bits) times matrix; XOR of the selected rows."""
    if v.bit_length() > m.rows:
        raise DimensionMismatch("vector longer than the matrix row count")
    acc = 0
    rows = m.row_ints
    while v:
        low = v & -v
        acc ^= rows[low.bit_length() - 1]
        v ^= low
    return acc


def matrix_times_vec(m: BinaryMatrix, v: int) -> int:
    """Matrix times column vector (m.cols bits); parity per row."""
    if v.bit_length() > m.cols:
        raise DimensionMismatch("vector longer than the matrix column count")
    acc = 0
    for i, row in enumerate(m.row_ints):
        if (row & v).bit_count() & 1:
            acc |= 1 << i
    return acc


class Permutation:
    """A bijection on [0, n), stored as an index array.

    ``apply`` with the forward flag computes v times the transposed
    permutation matrix P, where P has its (i, map[i]) entries set:
    out[i] = v[map[i]].  The inverse flag undoes it: out[map[i]] = v[i].
    """

    __slots__ = ("map",)

    def __init__(self, mapping):
        mapping = tuple(mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise DimensionMismatch("permutation must be a bijection on [0, n)")
        self.map = mapping

    def __len__(self) -> int:
        return len(self.map)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.map == other.map

    def __hash__(self):
        return hash(self.map)

    def __repr__(self) -> str:
        return f"Permutation({list(self.map)})"

    def apply(self, v: int, inverse: bool = False) -> int:
        if v.bit_length() > len(self.map):
            raise DimensionMismatch("vector longer than the permutation")
        out = 0
        if inverse:
            for i, mi in enumerate(self.map):
                if (v >> i) & 1:
                    out |= 1 << mi
        else:
            for i, mi in enumerate(self.map):
                if (v >> mi) & 1:
                    out |= 1 << i
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.map)
        for i, mi in enumerate(self.map):
            inv[mi] = i
        return Permutation(inv)

    def to_matrix(self) -> BinaryMatrix:
        n = len(self.map)
        return BinaryMatrix(n, n, [1 << mi for mi in self.map])


@dataclass(frozen=True)
class Scrambler:
    """An invertible matrix bundled with its inverse."""

    s: BinaryMatrix
    s_inv: BinaryMatrix


def random_permutation(n: int, rng: SeededRng) -> Permutation:
    if n < 1:
        raise DimensionMismatch("permutation length must be at least 1")
    return Permutation(rng.permutation(n))


def random_invertible(dim: int, rng: SeededRng) -> Scrambler:
    """Uniform invertible matrix, by rejection of singular draws."""
    if dim < 1:
        raise DimensionMismatch("dimension must be at least 1")
    while True:
        m = BinaryMatrix(dim, dim, [rng.randbits(dim) for _ in range(dim)])
        try:
            return Scrambler(m, m.invert())
        except SingularMatrixError:
            continue
