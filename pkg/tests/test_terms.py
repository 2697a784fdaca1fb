import pytest
from hypothesis import given

from surfcalc import terms
from surfcalc.terms import Circle, LabelError, TermSyntaxError

from strategies import whole_terms

# Euler characteristics of the pieces: gluing along circles adds them, and a
# free slot is an open collar that contributes nothing.
CHI = {"D": 1, "P": -1, "T": -2}


def chi(t) -> int:
    if isinstance(t, (terms.Slot, terms.Circle)):
        return 0
    return CHI[terms.generator(t).value] + sum(chi(c) for c in terms.children(t))


def genus_from_chi(t) -> int:
    boundary = terms.free_count(t) + 1
    if isinstance(t, Circle):
        return 0
    twice = 2 - chi(t) - boundary
    assert twice % 2 == 0
    return twice // 2


@pytest.mark.parametrize("text, genus, free, labeling", [
    ("D", 0, 0, ()),
    ("T(D)", 1, 0, ()),
    ("P(@1,@2)", 0, 2, (1, 2)),
    ("P(@2,T(@1))", 1, 2, (2, 1)),
    ("O@1", 0, 1, (1,)),
])
def test_signature_examples(text, genus, free, labeling):
    sig = terms.signature(terms.parse(text))
    assert (sig.genus, sig.free_count, sig.labeling) == (genus, free, labeling)


def test_graft_examples():
    G = terms.parse("P(@1,@2)")
    assert terms.graft(Circle(1), 1, G) == G
    glued = terms.graft(terms.parse("T(@1)"), 1, terms.parse("T(D)"))
    assert str(glued) == "T(T(D))" and terms.genus(glued) == 2


@pytest.mark.parametrize("text", ["P(@1", "Q", "P(@1,@2))", "@0", "T()", ""])
def test_syntax_errors(text):
    with pytest.raises(TermSyntaxError):
        terms.parse(text)


@pytest.mark.parametrize("text", ["@1", "P(@1,@1)", "P(@1,@3)", "T(O@1)", "P(O@1,D)"])
def test_label_errors(text):
    with pytest.raises(LabelError):
        terms.parse(text)


def test_whitespace_is_ignored():
    assert terms.parse(" P( @1 , T( D ) ) ") == terms.parse("P(@1,T(D))")


@given(whole_terms())
def test_render_parse_round_trip(t):
    assert terms.parse(terms.render(t)) == t


@given(whole_terms())
def test_json_round_trip(t):
    assert terms.from_json(terms.to_json(t)) == t


@given(whole_terms())
def test_genus_matches_euler_characteristic(t):
    assert terms.genus(t) == genus_from_chi(t)


@given(whole_terms())
def test_labels_are_one_to_n(t):
    assert sorted(terms.slot_labels(t)) == list(range(1, terms.free_count(t) + 1))
