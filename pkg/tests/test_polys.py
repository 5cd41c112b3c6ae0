"""Polynomial ring operations and the coset-driven factorization of x^n - 1."""

import pytest
from hypothesis import given, strategies as st

from optbch.cosets import all_cosets
from optbch.fields import build_field, field_for_order
from optbch.polys import (
    BinaryPolynomial,
    _expand_root_product,
    _krylov_minimal_polynomial,
    factor_x_pow_n_minus_one,
    gcd,
    lcm,
    minimal_polynomial,
    reciprocal,
    verify_factorization,
    x_pow_n_minus_one,
)

P = BinaryPolynomial


def test_square_of_x_plus_one():
    assert (P(0b11) * P(0b11)).mask == 0b101


def test_gcd_lcm_of_the_two_cubics():
    a, b = P(0b1011), P(0b1101)  # x^3+x+1, x^3+x^2+1
    # Euclid by hand: x^3+x+1 = 1*(x^3+x^2+1) + (x^2+x); then remainders x+1, 0... -> gcd 1
    assert gcd(a, b).mask == 1
    assert lcm(a, b).mask == 0b1111111  # their product, degree 6


@given(st.integers(0, (1 << 80) - 1), st.integers(1, (1 << 40) - 1))
def test_divmod_round_trip(am, bm):
    a, b = P(am), P(bm)
    q, r = divmod(a, b)
    assert r.degree < b.degree or r.mask == 0
    assert (q * b + r).mask == am


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(P(0b101), P(0))


def test_minimal_polynomial_of_alpha_is_the_modulus():
    f = build_field(4)
    assert minimal_polynomial(f, f.alpha).mask == 0x13


def test_minimal_polynomial_gf8_alpha_cubed():
    f = build_field(3)
    e = f.element(f.alpha_pow(3))
    assert minimal_polynomial(f, e).mask == 0b1101  # x^3+x^2+1, coset {3,6,5}


def test_minimal_polynomial_gf16_alpha5():
    f = build_field(4)
    e = f.element(f.alpha_pow(5))  # order 3, coset {5,10} mod 15
    assert minimal_polynomial(f, e).mask == 0b111  # x^2+x+1


def test_minimal_polynomial_rejects_zero():
    with pytest.raises(ValueError):
        minimal_polynomial(build_field(4), 0)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8])
def test_minimal_polynomial_kills_all_conjugates(m):
    f = build_field(m)
    for v in range(1, 1 << m):
        p = minimal_polynomial(f, v)
        c = v
        for _ in range(p.degree):
            assert p.evaluate(f.element(c)).value == 0
            c = f.mul(c, c)
        assert c == v  # conjugate orbit length equals the degree


def test_krylov_agrees_with_product_expansion():
    f = build_field(16)
    for k in (1, 3, 257, 4369, 21845, 65534):
        v = f.alpha_pow(k)
        conj = [v]
        c = f.mul(v, v)
        while c != v:
            conj.append(c)
            c = f.mul(c, c)
        assert _krylov_minimal_polynomial(f, v, len(conj)) == _expand_root_product(f, conj)


def test_reciprocal_examples():
    assert reciprocal(P(0b1011)).mask == 0b1101
    assert reciprocal(P(0b11)).mask == 0b11  # x+1 is self-reciprocal
    with pytest.raises(ValueError):
        reciprocal(P(0b100))  # zero constant term
    with pytest.raises(ValueError):
        reciprocal(P(0))


@given(st.integers(1, (1 << 60) - 1).filter(lambda v: v & 1))
def test_reciprocal_is_an_involution(mask):
    assert reciprocal(reciprocal(P(mask))).mask == mask


def test_factorization_n7():
    factors = verify_factorization(7, build_field(3))
    assert sorted(f.mask for f in factors) == [0b11, 0b1011, 0b1101]
    prod = P(1)
    for f in factors:
        prod = prod * f
    assert prod.mask == x_pow_n_minus_one(7).mask == (1 << 7) | 1


def test_factorization_n1():
    assert [f.mask for f in factor_x_pow_n_minus_one(1)] == [0b11]


def test_factorization_n15_degrees():
    factors = verify_factorization(15, build_field(4))
    assert sorted(f.degree for f in factors) == [1, 2, 4, 4, 4]
    assert sum(f.degree for f in factors) == 15


def test_factorization_rejects_even_n():
    with pytest.raises(ValueError):
        verify_factorization(6, build_field(4))


@pytest.mark.parametrize("n", list(range(1, 100, 2)))
def test_factor_count_matches_coset_count_small(n):
    factors = factor_x_pow_n_minus_one(n)
    table = all_cosets(n)
    assert len(factors) == len(table.cosets)
    assert sorted(f.degree for f in factors) == sorted(c.size for c in table.cosets)


def test_factorization_large_order_path():
    # ord_37(2) = 36: exercises the irreducible-modulus field and Krylov route
    factors = factor_x_pow_n_minus_one(37)
    assert sorted(f.degree for f in factors) == [1, 36]
    prod = 1
    from optbch._gf2x import mul

    for f in factors:
        prod = mul(prod, f.mask)
    assert prod == (1 << 37) | 1


def test_polynomial_string_and_hex_round_trip():
    p = P(0b1011)
    assert str(p) == "x^3 + x + 1"
    assert P.from_hex(p.to_hex()) == p
    assert P.from_coefficients([1, 1, 0, 1]).mask == 0b1011
