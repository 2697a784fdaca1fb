import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surfcalc import cobordism as S
from surfcalc import perms, rewrite, terms
from surfcalc.operad import OperadElement, gamma_bar, graft_all

from strategies import elements, morphism_chain, permutations_of


def test_identity_of_zero_is_empty():
    e = S.identity(0)
    assert (e.source, e.target, e.components) == (0, 0, ())


def test_parse_and_print():
    f = S.parse_morphism("[P(@3,@1); T(@2)] : 3 -> 2")
    assert str(f) == "[P(@3,@1); T(@2)] : 3 -> 2"
    assert S.parse_morphism(str(f)) == f
    assert S.morphism_from_json(f.to_json()) == f


@pytest.mark.parametrize("text", ["[P(@1,@1)] : 2 -> 1", "[@1; @2] : 2 -> 1", "P(@1,@2)", "[T(@1)] : 2 -> 1"])
def test_bad_morphisms(text):
    with pytest.raises(ValueError):
        S.parse_morphism(text)


def test_composition_needs_matching_ends():
    with pytest.raises(S.CompositionError):
        S.compose(S.identity(2), S.identity(3))


@given(st.data())
def test_symmetries_compose_like_permutations(data):
    n = data.draw(st.integers(0, 5))
    s, t = data.draw(permutations_of(n)), data.draw(permutations_of(n))
    assert S.compose(S.symmetry(s), S.symmetry(t)) == S.symmetry(perms.compose(t, s))


@given(morphism_chain(3))
def test_associativity_and_units(chain):
    f, g, h = chain
    assert S.compose(S.compose(f, g), h) == S.compose(f, S.compose(g, h))
    assert S.compose(S.identity(f.source), f) == f == S.compose(f, S.identity(f.target))


@given(morphism_chain(2), morphism_chain(2))
def test_interchange(c1, c2):
    (f, g), (h, k) = c1, c2
    assert S.compose(S.tensor(f, h), S.tensor(g, k)) == S.tensor(S.compose(f, g), S.compose(h, k))


@given(morphism_chain(1), morphism_chain(1), morphism_chain(1))
def test_tensor_is_strictly_associative_and_unital(a, b, c):
    (f,), (g,), (h,) = a, b, c
    assert S.tensor(S.tensor(f, g), h) == S.tensor(f, S.tensor(g, h))
    assert S.tensor(S.identity(0), f) == f == S.tensor(f, S.identity(0))


@given(morphism_chain(1), morphism_chain(1))
def test_braiding_is_natural_and_involutive(a, b):
    (f,), (g,) = a, b
    lhs = S.compose(S.tensor(f, g), S.braiding(f.target, g.target))
    assert lhs == S.compose(S.braiding(f.source, g.source), S.tensor(g, f))
    assert S.compose(S.braiding(f.source, g.source), S.braiding(g.source, f.source)) == S.identity(f.source + g.source)


@given(morphism_chain(2))
def test_composition_against_one_shot_grafting(chain):
    f, g = chain
    composite = S.compose(f, g)
    for j, (comp, ins) in enumerate(zip(g.components, g.inputs)):
        raw = graft_all(comp.term, [f.components[b - 1].term for b in ins])
        assert composite.components[j].genus == terms.genus(raw)
    glued = [rewrite.normal_form(terms.as_whole(terms.substitute(
        terms.map_labels(c, {b: 10_000 + b for b in terms.slot_labels(c)}),
        {10_000 + b: f.component_terms()[b - 1] for b in range(1, f.target + 1)})))
        for c in g.component_terms()]
    assert [str(t) for t in composite.component_terms()] == [str(t) for t in glued]


# -- S(k, 1) and the operad -----------------------------------------------------


@given(elements(max_arity=4))
def test_element_round_trip(e):
    assert S.as_operad_element(S.from_operad_element(e)) == e


@given(st.integers(0, 4), st.integers(0, 2**32 - 1))
def test_morphism_round_trip(k, seed):
    f = S.random_morphism(random.Random(seed), k, 1)
    assert S.from_operad_element(S.as_operad_element(f)) == f


@given(st.data())
def test_composition_is_gamma(data):
    F = data.draw(elements(max_arity=3))
    Gs = [data.draw(elements(max_arity=2)) for _ in range(F.arity)]
    via_s = S.compose(S.tensor_all([S.from_operad_element(G) for G in Gs]), S.from_operad_element(F))
    assert S.as_operad_element(via_s) == gamma_bar(F, Gs)


def test_two_closed_surfaces_in_the_pants():
    F, G = OperadElement.of("T(D)"), OperadElement.of("D")
    via_s = S.compose(S.tensor(S.from_operad_element(F), S.from_operad_element(G)), S.from_operad_element(OperadElement.of("P(@1,@2)")))
    assert str(S.as_operad_element(via_s)) == "T(D)"


# -- pants loop -----------------------------------------------------------------


@pytest.mark.parametrize("text", ["D", "T(D)", "P(T(D),T(T(D)))"])
def test_pants_loop_examples(text):
    assert S.pants_loop_identity(S.from_operad_element(OperadElement.of(text)))


@given(elements(arity=0, max_genus=3))
def test_pants_loop(F):
    assert S.pants_loop_identity(S.from_operad_element(F))


# -- nerve ---------------------------------------------------------------------------


@given(morphism_chain(3))
def test_nerve_simplicial_identities(chain):
    x = S.nerve_simplex(chain)
    q = x.degree
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            assert x.face(j).face(i) == x.face(i).face(j - 1)
        assert x.degeneracy(i).face(i) == x == x.degeneracy(i).face(i + 1)
        for j in range(i, q + 1):
            assert x.degeneracy(j).degeneracy(i) == x.degeneracy(i).degeneracy(j + 1)
