from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taftinv.cyclo import CycNum
from taftinv.downup import PBWElement, algebra, bidegree_basis, graded_basis, parse_element
from taftinv.freealg import ActionSpec, classify_actions
from taftinv.parsing import ParseError, parse_scalar

SPECS = [s for n in (2, 3, 4) for s in classify_actions(n) if s.case == 1]


def _series_dim(d):
    # 1 / ((1-t)^2 (1-t^2))
    return sum(d - 2 * j + 1 for j in range(d // 2 + 1))


def test_graded_basis_counts():
    assert len(graded_basis(0)) == 1
    assert len(graded_basis(2)) == 4
    assert len(graded_basis(4)) == 9
    for d in range(41):
        assert len(graded_basis(d)) == _series_dim(d)
        assert len(set(graded_basis(d))) == len(graded_basis(d))


def test_bidegree_basis_partitions_graded_basis():
    for d in range(12):
        pieces = [m for p in range(d + 1) for m in bidegree_basis(p, d - p)]
        assert sorted(pieces) == sorted(graded_basis(d))


def test_vu_rewrites_through_z():
    s = ActionSpec(3, 0)
    alg = algebra(s)
    vu = alg.mul(alg.mono(0, 0, 1), alg.mono(1, 0, 0))
    assert vu == alg.mono(0, 1, 0) + alg.mono(1, 0, 1, alg.c)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"n{s.n}k{s.k}{s.sqrt_choice}")
def test_relations_vanish(spec):
    alg = algebra(spec)
    u, v = alg.mono(1, 0, 0), alg.mono(0, 0, 1)
    m = alg.mul
    r1 = m(m(v, v), u) - m(m(v, u), v).scale(spec.alpha) - m(m(u, v), v).scale(spec.beta)
    r2 = m(m(v, u), u) - m(m(u, v), u).scale(spec.alpha) - m(m(u, u), v).scale(spec.beta)
    assert not r1 and not r2


def test_relations_vanish_up_to_n8():
    for n in range(5, 9):
        for spec in classify_actions(n):
            if spec.case != 1:
                continue
            alg = algebra(spec)
            u, v = alg.mono(1, 0, 0), alg.mono(0, 0, 1)
            m = alg.mul
            r1 = m(m(v, v), u) - m(m(v, u), v).scale(spec.alpha) - m(m(u, v), v).scale(spec.beta)
            assert not r1


@pytest.mark.parametrize("spec", SPECS[:8], ids=lambda s: f"n{s.n}k{s.k}{s.sqrt_choice}")
def test_z_is_normal(spec):
    alg = algebra(spec)
    u, z, v = alg.mono(1, 0, 0), alg.mono(0, 1, 0), alg.mono(0, 0, 1)
    zu, uz = alg.mul(z, u), alg.mul(u, z)
    assert zu == uz.scale(zu.coefficient(1, 1, 0) / uz.coefficient(1, 1, 0))
    vz, zv = alg.mul(v, z), alg.mul(z, v)
    assert set(vz.terms) == {(0, 1, 1)} and set(zv.terms) == {(0, 1, 1)}


def _words(draw_len=6):
    return st.text(alphabet="uv", min_size=0, max_size=draw_len)


@pytest.mark.parametrize("spec", SPECS[:6], ids=lambda s: f"n{s.n}k{s.k}{s.sqrt_choice}")
def test_products_match_word_rewriting(spec):
    alg = algebra(spec)
    letters = {"u": alg.mono(1, 0, 0), "v": alg.mono(0, 0, 1)}
    for length in range(1, 7):
        for bits in range(2**length):
            word = "".join("uv"[(bits >> t) & 1] for t in range(length))
            prod = alg.scalar(1)
            for ch in word:
                prod = alg.mul(prod, letters[ch])
            assert prod == alg.normal_form_word(word), word


monos = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 3))


@given(st.sampled_from(SPECS), monos, monos, monos)
def test_associativity(spec, a, b, c):
    alg = algebra(spec)
    x, y, w = alg.mono(*a), alg.mono(*b), alg.mono(*c)
    assert alg.mul(alg.mul(x, y), w) == alg.mul(x, alg.mul(y, w))


@given(st.sampled_from(SPECS), monos, monos)
def test_products_are_homogeneous(spec, a, b):
    alg = algebra(spec)
    p = alg.mul(alg.mono(*a), alg.mono(*b))
    da = a[0] + 2 * a[1] + a[2]
    db = b[0] + 2 * b[1] + b[2]
    assert p.degrees() <= {da + db}
    assert p.bidegrees() <= {(a[0] + a[1] + b[0] + b[1], a[1] + a[2] + b[1] + b[2])}


def test_parse_z_definition():
    s = ActionSpec(3, 0)
    assert parse_element("v*u - w^-1*u*v", s) == algebra(s).mono(0, 1, 0)


def test_parse_mixed_products():
    s = ActionSpec(4, 1)
    alg = algebra(s)
    assert parse_element("v*z", s) == alg.mul(alg.mono(0, 0, 1), alg.mono(0, 1, 0))
    assert parse_element("2*u^2 + s*v - s*v", s) == alg.mono(2, 0, 0, CycNum.rational(8, 2))
    assert parse_element("(u + v)^2", s) == alg.power(alg.mono(1, 0, 0) + alg.mono(0, 0, 1), 2)
    assert parse_element("u/2", s) == alg.mono(1, 0, 0, CycNum.rational(8, 1) / 2)
    assert parse_element("w^4", s) == alg.scalar(1)


@pytest.mark.parametrize(
    "text, pos",
    [
        ("u^-1", 3),
        ("u^0", 2),
        ("u + q", 4),
        ("(u + v", 6),
        ("u +", 3),
        ("", 0),
        ("u / v", 2),
        ("u # v", 2),
        ("u v", 2),
    ],
)
def test_parse_errors_report_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text, ActionSpec(3, 0))
    assert info.value.position == pos


@pytest.mark.parametrize("spec", SPECS[:6], ids=lambda s: f"n{s.n}k{s.k}{s.sqrt_choice}")
def test_text_and_line_round_trips(spec):
    alg = algebra(spec)
    e = parse_element("3*u^2*z - s*z*v^2 + w*u*v/5 + r - 7/2*z^2", spec)
    assert parse_element(e.to_text(), spec) == e
    assert PBWElement.from_lines(e.to_lines(), spec.level) == e
    assert PBWElement.from_lines(PBWElement().to_lines(), spec.level) == PBWElement()
    assert alg.mul(e, alg.scalar(1)) == e


def test_scalar_parser():
    assert parse_scalar("r^6", 12) == CycNum.rational(12, -1)
    assert parse_scalar("1/2 + r - r", 4) == CycNum.rational(4, 1) / 2


def test_case_two_needs_normalizing():
    with pytest.raises(ValueError):
        algebra(ActionSpec(3, 0, 2))
