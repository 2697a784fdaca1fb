import math

import pytest
from hypothesis import given

from surfcalc.simplicial import operators as ops
from surfcalc.simplicial.operators import SimplicialOperator
from surfcalc.simplicial.sset import circle_model, standard_simplex
from surfcalc.suites import act_on_generic

from strategies import operator_words


@pytest.mark.parametrize("word, p, canonical", [
    ("d0 d1", 2, "d0 d1"),
    ("d1 d0", 2, "d0 d2"),
    ("d1 s0", 1, "id"),
    ("s0 s0", 0, "s1 s0"),
    ("d3 s1", 2, "s1 d2"),
    ("s1 d2 d4", 4, "s1 d2 d4"),
])
def test_canonical_examples(word, p, canonical):
    assert ops.format_word(ops.canonical_word(ops.parse_word(word), p)) == canonical


@pytest.mark.parametrize("word, p", [("d1", 0), ("d3", 2), ("x1", 3)])
def test_invalid_words(word, p):
    with pytest.raises(ops.OperatorError):
        ops.target_degree(ops.parse_word(word), p)


@given(operator_words())
def test_canonical_form_acts_like_the_word(wp):
    w, p = wp
    c = ops.canonical_word(w, p)
    assert ops.is_canonical(c)
    assert act_on_generic(c, p) == act_on_generic(w, p)
    assert ops.delta_map_of_word(c, p) == ops.delta_map_of_word(w, p)


@given(operator_words(max_p=3, max_len=4))
def test_acts_alike_on_a_simplicial_set(wp):
    w, p = wp
    X = standard_simplex(3)
    op = SimplicialOperator.from_word(w, p)
    for s in X.simplices(p):
        assert X.apply_word(w, s) == X.apply_operator(op, s)


@given(operator_words(max_p=4, max_len=4))
def test_delta_map_round_trip(wp):
    w, p = wp
    op = SimplicialOperator.from_word(w, p)
    assert ops.operator_from_delta_map(op.to_delta_map(), p) == op


@given(operator_words(max_p=4, max_len=3), operator_words(max_len=3, max_p=6))
def test_composition_is_concatenation(wp, vp):
    w, p = wp
    b = SimplicialOperator.from_word(w, p)
    v, _ = vp
    try:
        a = SimplicialOperator.from_word(v, b.target)
    except ops.OperatorError:
        return
    assert ops.compose(a, b) == SimplicialOperator.from_word(v + w, p)


@pytest.mark.parametrize("p, q", [(0, 0), (1, 2), (2, 1), (3, 3)])
def test_operator_count(p, q):
    assert len(list(ops.all_canonical(p, q))) == math.comb(p + q + 1, q + 1)


def test_uniqueness_by_degree_two():
    seen = {}
    for length in range(5):
        for w in ops.words(2, length):
            c = tuple(ops.canonical_word(w, 2))
            assert seen.setdefault(act_on_generic(c, 2), c) == c


def test_circle_faces_through_operators():
    X = circle_model()
    y = X.simplices(1)[0]
    assert X.apply_operator(SimplicialOperator.face(0, 1), y) == X.face(y, 0)
