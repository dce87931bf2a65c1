from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taftinv.cyclo import CycNum
from taftinv.downup import PBWElement, algebra, graded_basis
from taftinv.freealg import ActionSpec, classify_actions
from taftinv.linalg import identity, matmul, matpow
from taftinv.taft import (
    act_g,
    act_g_recursive,
    act_x,
    act_x_recursive,
    g_eigenvalue,
    g_exponent,
    iterated_x,
    mu,
    operator_matrix,
    x_block,
)

SPECS = [s for n in range(2, 7) for s in classify_actions(n) if s.case == 1]
SMALL = [s for s in SPECS if s.n <= 4]
ids = lambda s: f"n{s.n}k{s.k}{s.sqrt_choice}"  # noqa: E731


def test_g_on_generators():
    s = ActionSpec(5, 2)
    alg = algebra(s)
    w = s.omega
    assert act_g(s, alg.mono(1, 0, 0)) == alg.mono(1, 0, 0, w**3)
    assert act_g(s, alg.mono(0, 0, 1)) == alg.mono(0, 0, 1, w**2)
    assert act_g(s, alg.mono(0, 1, 0)) == alg.mono(0, 1, 0, w**5)


def test_x_on_generators():
    s = ActionSpec(4, 1)
    alg = algebra(s)
    assert act_x(s, alg.mono(0, 0, 1)) == alg.mono(1, 0, 0)
    assert not act_x(s, alg.mono(1, 0, 0))
    assert not act_x(s, alg.mono(0, 1, 0))
    assert not act_x(s, alg.scalar(3))


def test_x_on_v_to_the_n():
    for n in range(2, 8):
        for s in classify_actions(n):
            if s.case != 1:
                continue
            e = algebra(s).mono(0, 0, n)
            if s.regime == "n":
                assert not act_x(s, e)
            else:
                assert act_x(s, e) == algebra(s).mono(0, 1, n - 2, mu(s, n))
                assert mu(s, n)


@pytest.mark.parametrize("spec", SPECS, ids=ids)
def test_closed_forms_match_recursion(spec):
    for d in range(7):
        for m in graded_basis(d):
            e = PBWElement.monomial(*m, CycNum.rational(spec.level, 1))
            assert act_x(spec, e) == act_x_recursive(spec, e), m
            assert act_g(spec, e) == act_g_recursive(spec, e), m


def test_operator_matrix_examples():
    s = ActionSpec(3, 0)
    gx = operator_matrix(s, "x", 1)
    assert gx.source == [(0, 0, 1), (1, 0, 0)]
    one, zero = CycNum.rational(6, 1), CycNum.rational(6, 0)
    assert gx.matrix == [[zero, zero], [one, zero]]
    gg = operator_matrix(s, "g", 1)
    assert gg.matrix == [[one, zero], [zero, s.omega]]
    assert gx.apply([one, zero]) == [0, one]
    with pytest.raises(ValueError):
        operator_matrix(s, "y", 1)


@pytest.mark.parametrize("spec", SMALL, ids=ids)
def test_taft_relations_on_graded_pieces(spec):
    for d in range(2 * spec.n + 2):
        g = operator_matrix(spec, "g", d).matrix
        x = operator_matrix(spec, "x", d).matrix
        zero = CycNum.rational(spec.level, 0)
        one = CycNum.rational(spec.level, 1)
        gx = matmul(g, x, zero)
        wxg = [[spec.omega * a for a in row] for row in matmul(x, g, zero)]
        assert gx == wxg
        size = len(g)
        assert matpow(g, spec.n, zero, one) == identity(size, zero, one)
        assert all(not a for row in matpow(x, spec.n, zero, one) for a in row)


@pytest.mark.parametrize("spec", SMALL, ids=ids)
def test_x_shifts_bidegree_and_g_is_scalar_on_blocks(spec):
    for p in range(5):
        for q in range(5):
            e = algebra(spec).scalar(0)
            for j in range(min(p, q) + 1):
                e = e + algebra(spec).mono(p - j, j, q - j)
                assert g_eigenvalue(spec, (p - j, j, q - j)) == spec.omega ** g_exponent(spec, p, q)
            assert act_x(spec, e).bidegrees() <= {(p + 1, q - 1)}
            assert len(x_block(spec, p, q)) == (min(p + 1, q - 1) + 1 if q else 0)


def test_iterated_x_vanishes_at_n():
    for s in SMALL:
        for d in range(2 * s.n + 1):
            for m in graded_basis(d):
                assert not iterated_x(s, s.n, algebra(s).mono(*m))


def test_q_scales_x_linearly():
    q = CycNum.rational(8, 3)
    base, scaled = ActionSpec(4, 2), ActionSpec(4, 2, q=q)
    for d in range(6):
        for m in graded_basis(d):
            e = PBWElement.monomial(*m, CycNum.rational(8, 1))
            assert act_x(scaled, e) == act_x(base, e).scale(q)
            assert act_g(scaled, e) == act_g(base, e)


monos = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 3))


@given(st.sampled_from(SMALL), monos, monos)
def test_twisted_leibniz_on_products(spec, a, b):
    alg = algebra(spec)
    x, y = alg.mono(*a), alg.mono(*b)
    lhs = act_x(spec, alg.mul(x, y))
    rhs = alg.mul(act_g(spec, x), act_x(spec, y)) + alg.mul(act_x(spec, x), y)
    assert lhs == rhs


@given(st.sampled_from(SMALL), monos, monos)
def test_g_is_multiplicative(spec, a, b):
    alg = algebra(spec)
    x, y = alg.mono(*a), alg.mono(*b)
    assert act_g(spec, alg.mul(x, y)) == alg.mul(act_g(spec, x), act_g(spec, y))


def test_case_two_rejected():
    s = ActionSpec(3, 0, 2)
    with pytest.raises(ValueError):
        act_x(s, PBWElement())
