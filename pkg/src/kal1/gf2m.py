"""Arithmetic in GF(2^m) and in GF(2^m)[x].

Field elements are ints: bit i is the coefficient of x^i, reduced
modulo a fixed irreducible polynomial of degree m.  Polynomials over
the field are lists of elements with index = degree, normalized so the
last entry is nonzero; the zero polynomial is the empty list.
"""

from __future__ import annotations

# One pinned reduction polynomial per extension degree.  Deterministic
# fixtures depend on these defaults; callers may override with any
# irreducible polynomial of the right degree.
DEFAULT_REDUCTION_POLYS = {
    4: 0x13,      # x^4 + x + 1
    5: 0x25,      # x^5 + x^2 + 1
    6: 0x43,      # x^6 + x + 1
    7: 0x89,      # x^7 + x^3 + 1
    8: 0x11D,     # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,     # x^9 + x^4 + 1
    10: 0x409,    # x^10 + x^3 + 1
    11: 0x805,    # x^11 + x^2 + 1
    12: 0x1053,   # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,   # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,   # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,   # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


def _gf2_poly_mod(a: int, b: int) -> int:
    """Remainder of a mod b, both polynomials over GF(2) as ints."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def gf2_poly_is_irreducible(f: int) -> bool:
    """Trial division over GF(2); fine for the degrees used here."""
    deg = f.bit_length() - 1
    if deg < 1:
        return False
    for g in range(2, 1 << (deg // 2 + 1)):
        if _gf2_poly_mod(f, g) == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """GF(2^m) in polynomial basis; immutable and freely shareable.

    Multiplication uses discrete log/antilog tables built once at
    construction from a found multiplicative generator, so any
    irreducible reduction polynomial works, primitive or not.
    """

    def __init__(self, m: int, reduction_poly: int | None = None):
        if not 4 <= m <= 16:
            raise ValueError(f"extension degree must be in [4, 16], got {m}")
        if reduction_poly is None:
            reduction_poly = DEFAULT_REDUCTION_POLYS[m]
        if reduction_poly.bit_length() != m + 1 or not reduction_poly & 1:
            raise ValueError("reduction polynomial must have degree m and a set constant term")
        if not gf2_poly_is_irreducible(reduction_poly):
            raise ValueError(f"reduction polynomial {reduction_poly:#x} is reducible")
        self.m = m
        self.reduction_poly = reduction_poly
        self.order = 1 << m
        self._build_tables()

    def _mul_slow(self, a: int, b: int) -> int:
        # shift-and-reduce; only used to bootstrap the tables
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if (a >> self.m) & 1:
                a ^= self.reduction_poly
        return r

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        q1 = self.order - 1
        primes = _prime_factors(q1)
        gen = 2
        while not all(self._pow_slow(gen, q1 // p) != 1 for p in primes):
            gen += 1
        # exp table doubled so mul can index log[a]+log[b] without a mod
        exp = [0] * (2 * q1)
        log = [0] * self.order
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = self._mul_slow(v, gen)
        for i in range(q1, 2 * q1):
            exp[i] = exp[i - q1]
        self.exp_table = exp
        self.log_table = log

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        return self.exp_table[self.order - 1 - self.log_table[a]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self.exp_table[(self.log_table[a] * e) % (self.order - 1)]

    def sqrt(self, a: int) -> int:
        """Square root, i.e. a^(2^(m-1)); every element has one."""
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] << (self.m - 1)) % (self.order - 1)]

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"Field(m={self.m}, reduction_poly={self.reduction_poly:#x})"


# --- polynomials over GF(2^m), lowest degree first ---


def poly_trim(f: list[int]) -> list[int]:
    i = len(f)
    while i and f[i - 1] == 0:
        i -= 1
    return f[:i]


def poly_deg(f: list[int]) -> int:
    return len(f) - 1


def poly_add(f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] ^= c
    return poly_trim(out)


def poly_scale(field: Field, f: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    return poly_trim([field.mul(a, c) for a in f])


def poly_mul(field: Field, f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    mul = field.mul
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] ^= mul(a, b)
    return poly_trim(out)


def poly_sqr(field: Field, f: list[int]) -> list[int]:
    # char 2: squaring just spreads the coefficients
    if not f:
        return []
    out = [0] * (2 * len(f) - 1)
    for i, a in enumerate(f):
        if a:
            out[2 * i] = field.mul(a, a)
    return poly_trim(out)


def poly_divmod(field: Field, f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    g = poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], poly_trim(r)
    q = [0] * (len(r) - dg)
    lc_inv = field.inv(g[-1])
    mul = field.mul
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if not c:
            continue
        coef = mul(c, lc_inv)
        q[i - dg] = coef
        for j, b in enumerate(g):
            if b:
                r[i - dg + j] ^= mul(coef, b)
    return poly_trim(q), poly_trim(r[:dg])


def poly_mod(field: Field, f: list[int], g: list[int]) -> list[int]:
    return poly_divmod(field, f, g)[1]


def poly_gcd(field: Field, f: list[int], g: list[int]) -> list[int]:
    a, b = poly_trim(f), poly_trim(g)
    while b:
        a, b = b, poly_mod(field, a, b)
    if a and a[-1] != 1:
        a = poly_scale(field, a, field.inv(a[-1]))
    return a


def poly_eea(field: Field, f: list[int], g: list[int]) -> tuple[list[int], list[int], list[int]]:
    """Full extended Euclid: (d, u, v) with u*f + v*g = d, d monic gcd."""
    r0, r1 = poly_trim(f), poly_trim(g)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, poly_add(u0, poly_mul(field, q, u1))
        v0, v1 = v1, poly_add(v0, poly_mul(field, q, v1))
    if r0 and r0[-1] != 1:
        c = field.inv(r0[-1])
        r0, u0, v0 = poly_scale(field, r0, c), poly_scale(field, u0, c), poly_scale(field, v0, c)
    return r0, u0, v0


def poly_eea_bounded(
    field: Field, f: list[int], g: list[int], dbound: int
) -> tuple[list[int], list[int], list[int]]:
    """Extended Euclid on (f, g) stopped at the first remainder of
    degree <= dbound; returns (r, u, v) with u*f + v*g = r."""
    r0, r1 = poly_trim(f), poly_trim(g)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while poly_deg(r1) > dbound:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, poly_add(u0, poly_mul(field, q, u1))
        v0, v1 = v1, poly_add(v0, poly_mul(field, q, v1))
    return r1, u1, v1


def poly_inv_mod(field: Field, f: list[int], g: list[int]) -> list[int]:
    """Inverse of f modulo g; raises ZeroDivisionError if gcd(f, g) != 1."""
    r, _, v = poly_eea_bounded(field, g, poly_mod(field, f, g), 0)
    if not r:
        raise ZeroDivisionError("polynomial not invertible modulo g")
    return poly_mod(field, poly_scale(field, v, field.inv(r[0])), g)


def poly_deriv(f: list[int]) -> list[int]:
    # formal derivative in char 2: even-degree terms vanish
    return poly_trim([f[i] if i & 1 else 0 for i in range(1, len(f))])


def poly_eval(field: Field, f: list[int], x: int) -> int:
    """Horner evaluation; the constant polynomial [] evaluates to 0."""
    acc = 0
    mul = field.mul
    for c in reversed(f):
        acc = mul(acc, x) ^ c
    return acc


def is_irreducible(field: Field, f: list[int]) -> bool:
    """Whether f of degree >= 1 is irreducible over GF(2^m).

    Checks gcd(x^(q^i) - x, f) = 1 for i up to deg(f)/2, which rules
    out every factor of degree at most deg(f)/2 and therefore all of
    them.  Composites with small factors exit on the first levels.
    """
    f = poly_trim(f)
    t = poly_deg(f)
    if t < 1:
        return False
    if f[-1] != 1:
        f = poly_scale(field, f, field.inv(f[-1]))
    if t == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(t // 2):
        for _ in range(field.m):
            h = poly_mod(field, poly_sqr(field, h), f)
        if poly_deg(poly_gcd(field, poly_add(h, x), f)) >= 1:
            return False
    return True


def sqrt_x_mod(field: Field, g: list[int]) -> list[int]:
    """x^(2^(m*t-1)) mod g, the square root of x when g is irreducible."""
    h = [0, 1]
    for _ in range(field.m * poly_deg(g) - 1):
        h = poly_mod(field, poly_sqr(field, h), g)
    return h


def poly_sqrt_mod(field: Field, s: list[int], g: list[int], sqrt_x: list[int]) -> list[int]:
    """Square root of s modulo irreducible g, via the even/odd split.

    With s(x) = a(x^2) + x b(x^2), the root is A(x) + sqrt(x) B(x)
    where A, B take coefficient-wise field square roots of a and b.
    """
    even = poly_trim([field.sqrt(c) for c in s[0::2]])
    odd = poly_trim([field.sqrt(c) for c in s[1::2]])
    return poly_mod(field, poly_add(even, poly_mul(field, odd, sqrt_x)), g)
