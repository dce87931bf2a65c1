from __future__ import annotations

from math import gcd

import pytest

from taftinv.downup import algebra
from taftinv.freealg import ActionSpec, classify_actions
from taftinv.invariants import (
    a_element,
    a_squared_scalar,
    anticommuting_pair,
    block_kernel,
    commutativity_report,
    find_generators,
    full_invariants,
    invariant_dims,
    is_invariant,
    verify_presentation,
    x_invariants,
)
from taftinv.linalg import rank
from taftinv.taft import act_g, act_x

CASE1 = [s for n in range(2, 6) for s in classify_actions(n) if s.case == 1]
ORDER_N = [s for s in CASE1 if s.regime == "n"]
ORDER_2N = [s for s in CASE1 if s.regime == "2n"]
ids = lambda s: f"n{s.n}k{s.k}{s.sqrt_choice}"  # noqa: E731


def _coeffs_of(factors, top):
    # power series of prod 1/(1 - t^e)
    out = [1] + [0] * top
    for e in factors:
        for d in range(e, top + 1):
            out[d] += out[d - e]
    return out


def test_degree_one_is_u():
    for s in CASE1:
        b = x_invariants(s, 1)
        assert b.vectors == [algebra(s).mono(1, 0, 0)]


def test_degree_zero_is_constants():
    for s in CASE1[:5]:
        assert full_invariants(s, 0).vectors == [algebra(s).scalar(1)]


def test_n3_k0_alt_degree_two_is_empty():
    assert full_invariants(ActionSpec(3, 0, 1, "alt"), 2).dim == 0


def test_n2_k1_degree_one():
    s = ActionSpec(2, 1)
    assert full_invariants(s, 1).vectors == [algebra(s).mono(1, 0, 0)]


@pytest.mark.parametrize("spec", ORDER_N, ids=ids)
def test_order_n_hilbert_series_of_x_invariants(spec):
    top = 3 * spec.n + 2
    assert invariant_dims(spec, top, "x-only") == _coeffs_of([1, 2, spec.n], top)


@pytest.mark.parametrize("spec", CASE1, ids=ids)
def test_basis_vectors_are_invariant(spec):
    for d in range(2 * spec.n + 1):
        xb = x_invariants(spec, d)
        fb = full_invariants(spec, d)
        for e in xb.vectors:
            assert not act_x(spec, e)
            assert e.degrees() == {d}
        for e in fb.vectors:
            assert not act_x(spec, e) and act_g(spec, e) == e
        assert fb.dim <= xb.dim


@pytest.mark.parametrize("spec", ORDER_2N, ids=ids)
def test_a_is_x_invariant(spec):
    a = a_element(spec)
    assert a and is_invariant(spec, a, "x-only")
    assert a.degrees() == {2 * spec.n - 1}


def test_block_kernels_are_independent():
    s = ActionSpec(4, 1)
    for p in range(6):
        for q in range(6):
            for flavor in ("x-only", "full"):
                ker = block_kernel(s, p, q, flavor)
                assert rank(ker) == len(ker)


def _in_span(vectors, e, d, spec):
    from taftinv.downup import graded_basis

    basis = graded_basis(d)
    zero = algebra(spec).zero
    rows = [[v.coefficient(*m, zero) for m in basis] for v in vectors]
    return rank(rows + [[e.coefficient(*m, zero) for m in basis]]) == rank(rows)


@pytest.mark.parametrize("spec", CASE1[:12], ids=ids)
def test_subring_closure(spec):
    alg = algebra(spec)
    for flavor, fn in (("x-only", x_invariants), ("full", full_invariants)):
        bases = {d: fn(spec, d).vectors for d in range(2 * spec.n + 2)}
        for d1 in range(1, spec.n + 1):
            for d2 in range(d1, spec.n + 2):
                for a in bases[d1]:
                    for b in bases[d2]:
                        assert _in_span(bases[d1 + d2], alg.mul(a, b), d1 + d2, spec)


@pytest.mark.parametrize("spec", ORDER_N, ids=ids)
def test_order_n_generator_degrees(spec):
    rep = find_generators(spec, 3 * spec.n, "x-only")
    assert sorted(rep.degrees) == sorted([1, 2, spec.n])
    assert all(a == b for a, b in rep.dimension_table.values())


@pytest.mark.parametrize("spec", [s for s in ORDER_2N if s.n <= 4], ids=ids)
def test_order_2n_generator_degrees(spec):
    n = spec.n
    rep = find_generators(spec, 4 * n, "x-only")
    assert sorted(rep.degrees) == sorted([1, 2, 2 * n - 1, 2 * n])


def test_middle_k_full_generators():
    for n in (3, 5):
        s = ActionSpec(n, (n - 1) // 2, 1, "alt")
        assert s.regime == "n"
        rep = find_generators(s, 3 * n)
        assert sorted(rep.degrees) == [2, n, n]
        monos = {frozenset(g.terms) for _, g in rep.generators}
        assert monos == {frozenset({(0, 1, 0)}), frozenset({(n, 0, 0)}), frozenset({(0, 0, n)})}
        assert all(a == b for a, b in rep.dimension_table.values())


def test_polynomial_ring_generators():
    seen = 0
    for s in ORDER_N:
        n, k = s.n, s.k
        if (k + 1) * (2 * k + 1) % n:
            continue
        seen += 1
        a, b = n // gcd(k + 1, n), n // gcd(2 * k + 1, n)
        rep = find_generators(s, 3 * n + 2)
        monos = sorted(tuple(g.terms) for _, g in rep.generators)
        assert monos == sorted([((a, 0, 0),), ((0, b, 0),), ((0, 0, n),)])
        assert all(x == y for x, y in rep.dimension_table.values())
    assert seen


def test_generator_report_json():
    rep = find_generators(ActionSpec(3, 1), 6)
    d = rep.to_dict()
    assert d["generator_degrees"] == rep.degrees
    assert '"flavor": "full"' in rep.to_json()


def test_n2_k0_a_squared():
    s = ActionSpec(2, 0)
    alg = algebra(s)
    a = a_element(s)
    assert a_squared_scalar(s) == 1
    assert alg.mul(a, a) == alg.mono(2, 0, 4)


@pytest.mark.parametrize("spec", [s for s in CASE1 if s.n == 3 and s.regime == "n"], ids=ids)
def test_order_n_presentation_n3(spec):
    rep = verify_presentation(spec)
    assert rep.ok, rep.first_failure()


@pytest.mark.parametrize("spec", [s for s in ORDER_2N if s.n <= 4], ids=ids)
def test_order_2n_presentation(spec):
    rep = verify_presentation(spec)
    assert rep.ok, rep.first_failure()
    assert max(rep.dimension_table) == 4 * spec.n + 2


def test_presentation_with_scaled_x():
    from taftinv.cyclo import CycNum

    s = ActionSpec(3, 2, q=CycNum.rational(6, 2))
    rep = verify_presentation(s, 8)
    assert rep.ok, rep.first_failure()


@pytest.mark.parametrize("spec", [s for s in ORDER_N if s.n <= 4], ids=ids)
def test_order_n_invariants_commute(spec):
    assert commutativity_report(spec, 3 * spec.n).commutative


@pytest.mark.parametrize("spec", ORDER_2N, ids=ids)
def test_order_2n_witness_anticommutes(spec):
    x, y = anticommuting_pair(spec)
    assert is_invariant(spec, x) and is_invariant(spec, y)
    alg = algebra(spec)
    assert alg.mul(x, y) == -alg.mul(y, x)
    rep = commutativity_report(spec, 2 * spec.n + 1, [(x, y)])
    assert not rep.commutative and rep.anticommute


def test_degree_zero_is_commutative():
    for s in CASE1[:6]:
        assert commutativity_report(s, 0).commutative
