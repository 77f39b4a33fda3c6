"""Binary Goppa codes: construction and syndrome decoding.

A code is a support sequence of n distinct GF(2^m) elements plus a
monic irreducible degree-t polynomial g(x).  The parity-check matrix
over the field has entries alpha_i^j / g(alpha_i); its binary expansion
stacks the m coefficient bits of each entry, coefficient 0 topmost.
Decoding is Patterson's algorithm, which corrects any error of weight
up to t when g is irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binmat import BinaryMatrix
from .errors import DecodingFailure, DimensionMismatch, GenerationFailure, ParameterError
from .gf2m import (
    Field,
    is_irreducible,
    poly_add,
    poly_deg,
    poly_eea_bounded,
    poly_eval,
    poly_inv_mod,
    poly_sqr,
    poly_sqrt_mod,
    poly_trim,
    sqrt_x_mod,
)
from .rng import SeededRng

RESAMPLE_LIMIT = 100


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    t: int
    m: int

    def __post_init__(self):
        if not 4 <= self.m <= 16:
            raise ParameterError(f"field degree must be in [4, 16], got {self.m}")
        if self.n > (1 << self.m):
            raise ParameterError(f"code length {self.n} exceeds field size 2^{self.m}")
        if self.t < 2:
            raise ParameterError(f"error capability must be at least 2, got {self.t}")
        # the block layouts need n - k = m*t exactly; other k are rejected
        if self.k != self.n - self.m * self.t:
            raise ParameterError(
                f"dimension must equal n - m*t = {self.n - self.m * self.t}, got {self.k}"
            )
        if self.k < 1:
            raise ParameterError("parameters leave no message positions (k < 1)")

    @property
    def redundancy(self) -> int:
        return self.n - self.k


class ParityCheckMatrix:
    """Field-level and binary forms of the same parity check."""

    __slots__ = ("params", "field_rows", "binary", "column_ints")

    def __init__(self, params: CodeParams, field_rows: list[list[int]]):
        self.params = params
        self.field_rows = field_rows
        n, t, m = params.n, params.t, params.m
        # column i packs the m bits of each of the t field entries
        cols = [0] * n
        for j in range(t):
            row = field_rows[j]
            shift = j * m
            for i in range(n):
                cols[i] |= row[i] << shift
        self.column_ints = cols
        rows = []
        for j in range(t):
            row = field_rows[j]
            for b in range(m):
                acc = 0
                for i in range(n):
                    if (row[i] >> b) & 1:
                        acc |= 1 << i
                rows.append(acc)
        self.binary = BinaryMatrix(m * t, n, rows)

    def syndrome(self, e: int) -> int:
        """e times the transposed binary parity check, as an m*t-bit int."""
        if e.bit_length() > self.params.n:
            raise DimensionMismatch("error vector longer than the code length")
        acc = 0
        cols = self.column_ints
        while e:
            low = e & -e
            acc ^= cols[low.bit_length() - 1]
            e ^= low
        return acc


class GoppaCode:
    """Support + Goppa polynomial, with cached decoding artifacts."""

    def __init__(self, field: Field, params: CodeParams, support: list[int], goppa_poly: list[int]):
        goppa_poly = poly_trim(goppa_poly)
        if field.m != params.m:
            raise ParameterError("field degree does not match the parameters")
        if len(support) != params.n:
            raise ParameterError("support length does not match the code length")
        if len(set(support)) != params.n:
            raise ParameterError("support elements must be pairwise distinct")
        if any(not 0 <= a < field.order for a in support):
            raise ParameterError("support element outside the field")
        if poly_deg(goppa_poly) != params.t or goppa_poly[-1] != 1:
            raise ParameterError("Goppa polynomial must be monic of degree t")
        if any(poly_eval(field, goppa_poly, a) == 0 for a in support):
            raise ParameterError("Goppa polynomial vanishes on the support")
        self.field = field
        self.params = params
        self.support = list(support)
        self.goppa_poly = goppa_poly
        self._pc: ParityCheckMatrix | None = None
        self._sqrt_x: list[int] | None = None

    def parity_check(self) -> ParityCheckMatrix:
        # cached; recomputation would be identical, so races are benign
        if self._pc is None:
            fld = self.field
            inv_g = [fld.inv(poly_eval(fld, self.goppa_poly, a)) for a in self.support]
            rows = [inv_g]
            for _ in range(1, self.params.t):
                prev = rows[-1]
                rows.append([fld.mul(c, a) for c, a in zip(prev, self.support)])
            self._pc = ParityCheckMatrix(self.params, rows)
        return self._pc

    def _sqrt_of_x(self) -> list[int]:
        if self._sqrt_x is None:
            self._sqrt_x = sqrt_x_mod(self.field, self.goppa_poly)
        return self._sqrt_x

    def syndrome_poly(self, synd: int) -> list[int]:
        """Syndrome polynomial sum(1/(x - alpha_i)) mod g for the error
        behind synd, recovered linearly from the m*t syndrome bits.

        With field components S_r read off the syndrome, coefficient j
        equals sum over l > j of g_l * S_{l-1-j}; the map is triangular
        with unit diagonal, hence invertible.
        """
        fld = self.field
        t, m = self.params.t, self.params.m
        mask = fld.order - 1
        comps = [(synd >> (j * m)) & mask for j in range(t)]
        g = self.goppa_poly
        mul = fld.mul
        out = []
        for j in range(t):
            c = 0
            for l in range(j + 1, t + 1):
                gl = g[l]
                s = comps[l - 1 - j]
                if gl and s:
                    c ^= mul(gl, s)
            out.append(c)
        return poly_trim(out)

    def decode(self, synd: int) -> int:
        """Patterson decoding of a binary syndrome.

        Returns the unique error vector of weight <= t whose syndrome
        is synd; raises DecodingFailure when no such vector exists.
        """
        params = self.params
        if synd == 0:
            return 0
        if synd.bit_length() > params.m * params.t:
            raise DimensionMismatch("syndrome longer than m*t bits")
        fld = self.field
        g = self.goppa_poly
        t = params.t

        s_poly = self.syndrome_poly(synd)
        t_poly = poly_inv_mod(fld, s_poly, g)
        u = poly_add(t_poly, [0, 1])
        if not u:
            # T(x) = x: the locator is x itself, a single error at alpha = 0
            sigma = [0, 1]
        else:
            r = poly_sqrt_mod(fld, u, g, self._sqrt_of_x())
            if not r:
                sigma = [0, 1]
            else:
                a, _, b = poly_eea_bounded(fld, g, r, t // 2)
                sigma = poly_add(poly_sqr(fld, a), [0] + poly_sqr(fld, b))

        # root scan over the support; inlined table lookups keep it fast
        exp = fld.exp_table
        log = fld.log_table
        coeffs = sigma[:-1]
        lead = sigma[-1]
        e = 0
        nroots = 0
        for i, alpha in enumerate(self.support):
            if alpha:
                la = log[alpha]
                acc = lead
                for c in reversed(coeffs):
                    if acc:
                        acc = exp[log[acc] + la]
                    acc ^= c
            else:
                acc = sigma[0]
            if acc == 0:
                e |= 1 << i
                nroots += 1

        if nroots != poly_deg(sigma) or nroots > t:
            raise DecodingFailure("error locator does not split over the support")
        if self.parity_check().syndrome(e) != synd:
            raise DecodingFailure("recomputed syndrome mismatch")
        return e


def generate_code(params: CodeParams, rng: SeededRng) -> GoppaCode:
    """Sample a code: uniform distinct support, then g until irreducible.

    Irreducibility implies g has no roots in GF(2^m), so the support
    never needs filtering.  Codes whose binary parity check is rank
    deficient are resampled so that n - k = m*t holds exactly.
    """
    field = Field(params.m)
    for _ in range(RESAMPLE_LIMIT):
        support = rng.sample(field.order, params.n)
        while True:
            g = [rng.randbits(params.m) for _ in range(params.t)] + [1]
            if is_irreducible(field, g):
                break
        code = GoppaCode(field, params, support, g)
        if code.parity_check().binary.rank() == params.m * params.t:
            return code
    raise GenerationFailure("could not sample a full-rank code")
