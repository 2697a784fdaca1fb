import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surfcalc import gen, rewrite, terms
from surfcalc.rewrite import Rule

from strategies import whole_terms

P = terms.parse


def test_redexes_of_reassoc_example():
    assert rewrite.find_redexes(P("P(@1,P(@2,@3))")) == [((), Rule.REASSOC)]


def test_redex_set_found_by_brute_force():
    t = P("P(D,P(@1,D))")
    brute = {(pos, rule) for pos, node in terms.iter_positions(t) for rule in Rule if rewrite.matches(rule, node)}
    assert set(rewrite.find_redexes(t)) == brute == {
        ((), Rule.UNIT_LEFT), ((1,), Rule.UNIT_RIGHT), ((), Rule.REASSOC)}


@pytest.mark.parametrize("text, position, rule, expected", [
    ("P(@1,P(@2,@3))", (), Rule.REASSOC, "P(P(@1,@2),@3)"),
    ("P(@1,D)", (), Rule.UNIT_RIGHT, "O@1"),
    ("T(P(D,T(D)))", (0,), Rule.UNIT_LEFT, "T(T(D))"),
])
def test_single_steps(text, position, rule, expected):
    assert str(rewrite.apply_rule(P(text), position, rule)) == expected


def test_not_a_redex():
    with pytest.raises(rewrite.NotARedex):
        rewrite.apply_rule(P("P(@1,@2)"), (), Rule.REASSOC)


@pytest.mark.parametrize("text, normal", [
    ("P(@1,D)", "O@1"),
    ("P(@1,P(@2,@3))", "P(P(@1,@2),@3)"),
    ("P(D,D)", "D"),
    ("P(@1,P(@2,P(@3,@4)))", "P(P(P(@1,@2),@3),@4)"),
    ("T(P(D,P(@1,D)))", "T(@1)"),
])
def test_normal_forms(text, normal):
    assert str(rewrite.normal_form(P(text))) == normal


def test_left_comb_is_normal():
    assert rewrite.is_normal(P("P(P(@1,@2),@3)"))


def test_trace_replays():
    nf, trace = rewrite.normalize(P("P(D,P(@1,P(@2,D)))"))
    assert trace.replay() == nf == trace.target
    assert trace.to_json()["target"] == str(nf)


@given(whole_terms(), st.sampled_from(sorted(rewrite.STRATEGIES)), st.integers(0, 1000))
def test_every_strategy_reaches_the_same_normal_form(t, strategy, seed):
    nf, _ = rewrite.normalize(t, strategy, rng=random.Random(seed), check_measure=True)
    assert nf == rewrite.normal_form(t)
    assert rewrite.is_normal(nf)


@given(whole_terms())
def test_each_step_decreases_the_measure(t):
    t = terms.as_whole(t)
    for s in rewrite.successors(t):
        assert rewrite.measure(s) < rewrite.measure(t)


@given(whole_terms())
def test_rewriting_keeps_genus_and_labels(t):
    nf = rewrite.normal_form(t)
    assert terms.genus(nf) == terms.genus(t)
    assert terms.slot_labels(nf) == terms.slot_labels(terms.as_whole(t))


@given(whole_terms())
def test_normal_form_is_idempotent(t):
    nf = rewrite.normal_form(t)
    assert rewrite.normal_form(nf) == nf


def test_confluence_small():
    rep = rewrite.check_confluence(3)
    assert rep.ok and rep.counterexamples == []


def test_confluence_counts_up_to_seven_nodes():
    rep = rewrite.check_confluence(7)
    assert rep.ok
    assert rep.term_count == sum(1 for _ in gen.terms_up_to(7))


def test_critical_pairs_join():
    assert all(joined for _, _, joined in rewrite.critical_pairs())


# Frozen from brute force: normalize every term with at most 9 nodes and count
# distinct normal shapes per (arity, genus).
NORMAL_SHAPE_COUNTS = {(0, 0): 1, (0, 1): 1, (0, 2): 2, (1, 1): 3, (1, 2): 10, (2, 1): 12, (2, 2): 60,
                       (3, 2): 420, (4, 1): 360, (4, 2): 3360}


@pytest.mark.parametrize("key, count", sorted(NORMAL_SHAPE_COUNTS.items()))
def test_normal_term_counts(key, count):
    assert sum(1 for _ in gen.normal_terms(*key)) == count


def test_normal_terms_agree_with_brute_force():
    found = {}
    for t in gen.terms_up_to(7):
        nf = rewrite.normal_form(t)
        found.setdefault((terms.free_count(nf), terms.genus(nf)), set()).add(nf)
    for key in [(0, 0), (0, 1), (0, 2), (1, 1), (2, 1)]:
        assert found[key] == {t for t in gen.normal_terms(*key)}
