from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surfcalc.rectify import dcategory as D
from surfcalc.rectify.dcategory import DMorphism, DTildeMorphism, compose_dtilde


@pytest.mark.parametrize("p", [1, 2, 4, 6])
def test_one_top_face_gives_degree_one(p):
    g = DMorphism.from_word(f"d{p} f", p)
    assert D.degeneracy_degree(g) == 1
    assert [D.format_dword(w) for w in D.vertices(g)] == [f"d{p} f", f"f d{p}"]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_two_top_faces_give_degree_two(p):
    assert D.degeneracy_degree(DMorphism.from_word(f"d{p - 1} d{p} f", p)) == 2


@pytest.mark.parametrize("word, p, d", [("f", 3, 0), ("d0 f", 3, 0), ("f d0", 3, 0), ("s0 d4 f", 4, 1),
                                        ("d2 d4 f", 4, 1), ("d3 d4 f d0", 5, 2)])
def test_degree_examples(word, p, d):
    assert D.degeneracy_degree(DMorphism.from_word(word, p)) == d


def test_three_vertices():
    g = DMorphism.from_word("s0 d3 d4 f", 4)
    assert [D.format_dword(w) for w in D.vertices(g)] == ["s0 d3 d4 f", "s0 d3 f d4", "s0 f d3 d4"]


def test_f_commutes_in_d():
    assert DMorphism.from_word("f d4", 4) == DMorphism.from_word("d4 f", 4)
    assert D.canonical_vertex("f d4", 4) == (DMorphism.from_word("d4 f", 4), 1)
    assert D.canonical_vertex("f d0", 4) == (DMorphism.from_word("d0 f", 4), 0)


def test_minimal_degree():
    assert [D.minimal_degree(w) for w in ("f", "d4 f", "s0 d3 d4 f", "d0 d0")] == [0, 4, 4, 2]


def test_no_morphisms_from_f_to_e():
    with pytest.raises(D.DWordError):
        DMorphism(("F", 1), ("E", 1), D.SimplicialOperator.identity(1))


def test_closure_small():
    rep = D.check_against_closure(3, 3)
    assert rep.ok and rep.checked_bases > 0


@st.composite
def simplex_points(draw, max_p=4):
    p = draw(st.integers(0, max_p))
    q = draw(st.integers(0, max_p))
    g = draw(st.sampled_from(D.morphisms_e_to_f(p, q)))
    d = D.degeneracy_degree(g)
    raw = [draw(st.integers(0, 5)) for _ in range(d + 1)]
    if not any(raw):
        raw[0] = 1
    return DTildeMorphism(g, tuple(Fraction(x, sum(raw)) for x in raw))


@st.composite
def operator_chain(draw, obj, length, outward=True, max_p=5):
    """``length`` generators leaving ``obj`` (or landing in it, with ``outward=False``)."""
    out, cur = [], obj
    for _ in range(length):
        if outward:
            choices = [g for g in D.generators(cur) if g.target[1] <= max_p]
        else:
            choices = [g for src in ((cur[0], cur[1] - 1), (cur[0], cur[1] + 1)) if 0 <= src[1] <= max_p
                       for g in D.generators(src) if g.target == cur]
        g = draw(st.sampled_from(choices))
        out.append(g)
        cur = g.target if outward else g.source
    return out


@given(st.data())
def test_associativity_through_a_simplex(data):
    T = data.draw(simplex_points())
    a, a2 = data.draw(operator_chain(T.target, 2))
    b, b2 = data.draw(operator_chain(T.source, 2, outward=False))
    lhs = compose_dtilde(a2, compose_dtilde(a, compose_dtilde(T, compose_dtilde(b, b2))))
    rhs = compose_dtilde(compose_dtilde(compose_dtilde(a2, a), T), compose_dtilde(b, b2))
    assert lhs == rhs
    mid = compose_dtilde(compose_dtilde(a2, compose_dtilde(a, T)), b)
    assert compose_dtilde(mid, b2) == lhs
    assert sum(lhs.point) == 1 and min(lhs.point) >= 0


@given(st.data())
def test_composition_is_affine(data):
    T = data.draw(simplex_points())
    (a,) = data.draw(operator_chain(T.target, 1))
    got = compose_dtilde(a, T)
    expected = [Fraction(0)] * len(got.point)
    for k, t in T.vertex_weights().items():
        v = compose_dtilde(a, DTildeMorphism.vertex(T.base, k))
        expected = [e + t * x for e, x in zip(expected, v.point)]
    assert got.point == tuple(expected)


@given(st.data())
def test_vertices_restrict_to_word_composition(data):
    T = data.draw(simplex_points())
    k = data.draw(st.integers(0, T.dim))
    (a,) = data.draw(operator_chain(T.target, 1))
    base, j = D.canonical_vertex(list(a.op.word) + D.vertex_word(T.base, k), T.source[1])
    assert compose_dtilde(a, DTildeMorphism.vertex(T.base, k)) == DTildeMorphism.vertex(base, j)


def test_parse_points():
    assert str(D.parse_dtilde("d4 f #1", 4)) == "d4 f @ (1, 0)"
    T = D.parse_dtilde("d3 d4 f @ (1/2, 1/4, 1/4)", 4)
    assert T.point == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))
    assert D.parse_dtilde("f", 2).dim == 0
    with pytest.raises(ValueError):
        D.parse_dtilde("d4 f @ (1/2, 1/3)", 4)
    with pytest.raises(ValueError):
        D.parse_dtilde("d4 f", 4)


def test_face_after_a_vertex():
    T = D.parse_dtilde("d4 f #1", 4)  # f_3 d_4
    out = compose_dtilde(D.parse_dtilde("d1", 3, "F"), T)
    assert str(out) == "d1 d4 f @ (1, 0)"
