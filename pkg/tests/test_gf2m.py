"""Field and polynomial arithmetic against independent oracles."""

import random

import pytest

from kal1.gf2m import (
    DEFAULT_REDUCTION_POLYS,
    Field,
    gf2_poly_is_irreducible,
    is_irreducible,
    poly_add,
    poly_deg,
    poly_deriv,
    poly_divmod,
    poly_eea,
    poly_eea_bounded,
    poly_eval,
    poly_gcd,
    poly_inv_mod,
    poly_mod,
    poly_mul,
    poly_sqr,
    poly_sqrt_mod,
    poly_trim,
    sqrt_x_mod,
)


def schoolbook_mul(a: int, b: int, m: int, red: int) -> int:
    """Oracle: convolution over GF(2), then long division by red."""
    prod = 0
    for i in range(m):
        if (a >> i) & 1:
            prod ^= b << i
    for i in range(2 * m - 2, m - 1, -1):
        if (prod >> i) & 1:
            prod ^= red << (i - m)
    return prod


def test_default_polys_are_irreducible():
    for m, poly in DEFAULT_REDUCTION_POLYS.items():
        assert poly.bit_length() == m + 1 and poly & 1
        assert gf2_poly_is_irreducible(poly)


def test_field_construction_rejects_bad_inputs():
    with pytest.raises(ValueError):
        Field(3)
    with pytest.raises(ValueError):
        Field(17)
    with pytest.raises(ValueError):
        Field(4, 0x13 << 1)  # no constant term
    with pytest.raises(ValueError):
        Field(4, 0x15)  # x^4+x^2+1 = (x^2+x+1)^2
    with pytest.raises(ValueError):
        Field(4, 0x11)  # x^4 + 1 = (x+1)^4


def test_add_is_xor():
    f = Field(4)
    assert f.add(0x5, 0x3) == 0x6
    assert f.add(0x9, 0x9) == 0x0
    for a in range(16):
        assert f.add(a, 0) == a


def test_mul_examples():
    f = Field(4)
    assert f.mul(0x2, 0x9) == 0x1
    for a in range(16):
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0


def test_mul_matches_schoolbook_oracle():
    rnd = random.Random(101)
    for m in (4, 8, 10, 13):
        f = Field(m)
        red = DEFAULT_REDUCTION_POLYS[m]
        for _ in range(2000):
            a = rnd.randrange(f.order)
            b = rnd.randrange(f.order)
            assert f.mul(a, b) == schoolbook_mul(a, b, m, red)


def test_mul_exhaustive_m4():
    f = Field(4)
    red = DEFAULT_REDUCTION_POLYS[4]
    for a in range(16):
        for b in range(16):
            assert f.mul(a, b) == schoolbook_mul(a, b, 4, red)


def test_inverse_examples_and_exhaustive_search_oracle():
    f = Field(4)
    assert f.inv(0x2) == 0x9
    assert f.inv(1) == 1
    for a in range(1, 16):
        brute = next(b for b in range(1, 16) if f.mul(a, b) == 1)
        assert f.inv(a) == brute
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_inverse_and_order_exhaustive_small_fields():
    for m in range(4, 9):
        f = Field(m)
        for a in range(1, f.order):
            assert f.mul(a, f.inv(a)) == 1
            assert f.pow(a, f.order - 1) == 1


def test_field_axioms_random_triples():
    f = Field(10)
    rnd = random.Random(7)
    for _ in range(10_000):
        a, b, c = (rnd.randrange(f.order) for _ in range(3))
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_poly_eval_examples():
    f = Field(4)
    for x in range(16):
        assert poly_eval(f, [0xC], x) == 0xC
    g = [1, 1, 1]  # x^2 + x + 1
    assert poly_eval(f, g, 0) == 1
    expected = f.add(f.mul(0x2, 0x2), f.add(0x2, 1))
    assert expected == 0x7
    assert poly_eval(f, g, 0x2) == 0x7


def test_poly_eval_term_by_term_oracle():
    f = Field(8)
    rnd = random.Random(5)
    for _ in range(300):
        coeffs = [rnd.randrange(256) for _ in range(rnd.randrange(1, 7))]
        x = rnd.randrange(256)
        acc = 0
        for j, c in enumerate(coeffs):
            acc ^= f.mul(c, f.pow(x, j))
        assert poly_eval(f, coeffs, x) == acc


def test_poly_mul_and_divmod_roundtrip():
    f = Field(6)
    rnd = random.Random(11)
    for _ in range(400):
        a = poly_trim([rnd.randrange(64) for _ in range(rnd.randrange(1, 8))])
        b = poly_trim([rnd.randrange(64) for _ in range(rnd.randrange(1, 8))])
        if not b:
            continue
        q, r = poly_divmod(f, a, b)
        assert poly_deg(r) < poly_deg(b) or not r
        assert poly_add(poly_mul(f, q, b), r) == a


def test_eea_postcondition():
    f = Field(8)
    rnd = random.Random(13)
    for _ in range(300):
        a = poly_trim([rnd.randrange(256) for _ in range(rnd.randrange(1, 9))])
        b = poly_trim([rnd.randrange(256) for _ in range(rnd.randrange(1, 9))])
        d, u, v = poly_eea(f, a, b)
        assert poly_add(poly_mul(f, u, a), poly_mul(f, v, b)) == d
        if a or b:
            assert d
            assert not poly_mod(f, a, d)
            assert not poly_mod(f, b, d)
            assert d == poly_gcd(f, a, b)


def test_bounded_eea_identity_and_degrees():
    f = Field(8)
    rnd = random.Random(17)
    for _ in range(200):
        t = rnd.randrange(4, 12)
        g = [rnd.randrange(256) for _ in range(t)] + [1]
        r = poly_trim([rnd.randrange(256) for _ in range(rnd.randrange(1, t + 1))])
        if not r:
            continue
        a, u, b = poly_eea_bounded(f, g, r, t // 2)
        assert poly_add(poly_mul(f, u, g), poly_mul(f, b, r)) == a
        assert poly_deg(a) <= t // 2
        # a = b*r mod g
        assert poly_mod(f, poly_add(a, poly_mul(f, b, r)), g) == []


def test_poly_inv_mod():
    f = Field(4)
    g = [0xF, 0x9, 1]  # irreducible degree 2
    assert is_irreducible(f, g)
    rnd = random.Random(19)
    for _ in range(200):
        s = poly_trim([rnd.randrange(16) for _ in range(2)])
        if not s:
            continue
        inv = poly_inv_mod(f, s, g)
        assert poly_mod(f, poly_mul(f, s, inv), g) == [1]
    with pytest.raises(ZeroDivisionError):
        poly_inv_mod(f, [], g)


def test_formal_derivative():
    f = Field(4)
    # derivative of x^3 + a x^2 + b x + c is x^2 + b
    assert poly_deriv([5, 3, 7, 1]) == [3, 0, 1]
    # squares have zero derivative in char 2
    rnd = random.Random(23)
    for _ in range(100):
        p = poly_trim([rnd.randrange(16) for _ in range(4)])
        assert poly_deriv(poly_sqr(f, p)) == []


def brute_force_irreducible(field: Field, f: list[int]) -> bool:
    """Oracle: trial division by every monic polynomial of degree <= t/2."""
    t = poly_deg(f)

    def polys_of_degree(d):
        for low in range(field.order**d):
            coeffs = []
            v = low
            for _ in range(d):
                coeffs.append(v % field.order)
                v //= field.order
            yield coeffs + [1]

    for d in range(1, t // 2 + 1):
        for cand in polys_of_degree(d):
            if poly_mod(field, f, cand) == []:
                return False
    return True


def test_is_irreducible_against_brute_force():
    f = Field(4)
    rnd = random.Random(29)
    checked_irreducible = 0
    for _ in range(120):
        t = rnd.randrange(2, 5)
        g = [rnd.randrange(16) for _ in range(t)] + [1]
        expected = brute_force_irreducible(f, g)
        assert is_irreducible(f, g) == expected
        checked_irreducible += expected
    assert checked_irreducible > 0


def test_sqrt_mod_g():
    rnd = random.Random(31)
    for m, t in ((4, 2), (8, 4), (10, 3)):
        f = Field(m)
        while True:
            g = [rnd.randrange(f.order) for _ in range(t)] + [1]
            if is_irreducible(f, g):
                break
        sx = sqrt_x_mod(f, g)
        assert poly_mod(f, poly_sqr(f, sx), g) == [0, 1]
        for _ in range(100):
            s = poly_trim([rnd.randrange(f.order) for _ in range(t)])
            root = poly_sqrt_mod(f, s, g, sx)
            assert poly_mod(f, poly_sqr(f, root), g) == poly_mod(f, s, g)


def test_field_sqrt():
    for m in (4, 8):
        f = Field(m)
        for a in range(f.order):
            assert f.mul(f.sqrt(a), f.sqrt(a)) == a
