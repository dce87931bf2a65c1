from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taftinv.cyclo import (
    CycNum,
    RootOfUnity,
    cyclotomic_polynomial,
    divisors,
    gauss_binomial,
    order_of,
    primitive_root,
)

LEVELS = [1, 2, 3, 4, 6, 8, 10, 12]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@st.composite
def cycnums(draw, level=None):
    level = level or draw(st.sampled_from(LEVELS))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=8))
    return CycNum(level, coeffs)


@st.composite
def triples(draw):
    level = draw(st.sampled_from(LEVELS))
    return tuple(draw(cycnums(level)) for _ in range(3))


def test_small_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


@pytest.mark.parametrize("n", range(1, 31))
def test_product_of_cyclotomics_is_t_n_minus_1(n):
    prod = [1]
    for d in divisors(n):
        prod = _poly_mul(prod, cyclotomic_polynomial(d))
    assert prod == [-1] + [0] * (n - 1) + [1]


def test_primitive_root_examples():
    assert primitive_root(2) == -1
    i = primitive_root(4)
    assert i * i == -1
    z = primitive_root(6)
    assert z**3 == -1 and z != -1


@pytest.mark.parametrize("n", range(1, 33))
def test_primitive_root_has_exact_order(n):
    z = primitive_root(n)
    assert z**n == 1
    assert all(z**d != 1 for d in divisors(n) if d < n)
    assert order_of(z) == n


def test_order_of_examples():
    assert order_of(CycNum.rational(5, 1)) == 1
    assert order_of(primitive_root(10) ** 4) == 5
    assert order_of(CycNum.rational(4, 2)) is None
    with pytest.raises(ValueError):
        order_of(CycNum.rational(4, 0))


def test_order_of_includes_sign():
    # -zeta_5 has order 10 even though the level is odd
    assert order_of(-primitive_root(5)) == 10


@given(triples())
def test_ring_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(cycnums())
def test_inverse(a):
    if a:
        assert a * a.inverse() == 1
        assert a / a == 1


def test_canonical_equality_and_hash():
    z = primitive_root(12)
    a = z**4 - z**2 + 1  # Phi_12(z) = 0
    assert a == 0 and a.is_zero()
    assert hash(z**12) == hash(CycNum.rational(12, 1))
    assert len(z.coeffs) == 4


def test_text_form():
    z = primitive_root(8)
    assert str(Fraction(1, 2) * z**3 - 2) == "-2 + 1/2*r^3"
    assert (z - z).to_string() == "0"


def test_rational_embedding_and_fraction():
    x = CycNum.rational(6, Fraction(3, 4))
    assert x.is_rational() and x.to_fraction() == Fraction(3, 4)
    assert not primitive_root(6).is_rational()


def test_root_of_unity_normalization():
    r = RootOfUnity(6, 4)
    assert (r.exponent, r.order) == (1, 2)
    assert RootOfUnity(-1, 3) == RootOfUnity(2, 3)
    assert RootOfUnity(1, 6).to_cycnum(12) == primitive_root(12) ** 2
    assert RootOfUnity(2, 4).is_power_of(RootOfUnity(1, 4))
    assert not RootOfUnity(1, 4).is_power_of(RootOfUnity(1, 2))


def test_gauss_binomial_examples():
    q = primitive_root(6)
    assert gauss_binomial(5, 0, q) == 1
    assert gauss_binomial(1, 2, q) == 0
    assert gauss_binomial(4, 2, 1) == 6
    for n in range(2, 9):
        w = primitive_root(2 * n) ** 2
        assert gauss_binomial(n, 1, w.inverse()) == 0


def _gauss_by_products(m, r, q):
    # oracle only used where no denominator vanishes
    num = den = CycNum.rational(q.level, 1)
    for i in range(r):
        num = num * (1 - q ** (m - i))
        den = den * (1 - q ** (i + 1))
    return num / den


@pytest.mark.parametrize("n", range(2, 9))
def test_q_pascal_for_all_powers(n):
    z = primitive_root(2 * n)
    for e in range(2 * n):
        q = z**e
        for m in range(1, 13):
            for r in range(1, m + 1):
                lhs = gauss_binomial(m, r, q)
                rhs = gauss_binomial(m - 1, r, q) + q ** (m - r) * gauss_binomial(m - 1, r - 1, q)
                assert lhs == rhs


def test_gauss_binomial_matches_product_formula_off_roots():
    q = CycNum.rational(6, 3) + primitive_root(6)  # not a root of unity
    for m in range(8):
        for r in range(m + 1):
            assert gauss_binomial(m, r, q) == _gauss_by_products(m, r, q)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_periodicity_at_roots_of_unity(n):
    q = primitive_root(n)
    # [m+n, r] = [m, r] for 0 < r < n
    for m in range(0, 10):
        for r in range(1, n):
            assert gauss_binomial(m + n, r, q) == gauss_binomial(m, r, q)
