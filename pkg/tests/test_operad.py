import pytest
from hypothesis import given
from hypothesis import strategies as st

from surfcalc import perms, rewrite, terms
from surfcalc.operad import (BASEPOINT, MTerm, OperadElement, disc, eta_m, gamma_bar, graft_all, m_map, mu_m,
                             sigma_act, unit)

from strategies import elements, permutations_of

E = OperadElement.of


def test_unit_is_the_circle():
    assert str(unit()) == "O@1"


def test_two_discs_in_the_pants_give_a_disc():
    assert gamma_bar(E("P(@1,@2)"), [disc(), disc()]) == disc()


def test_block_relabeling():
    out = gamma_bar(E("P(@2,@1)"), [E("P(@1,@2)"), E("T(@1)")])
    # slot 2 of the pants receives the first argument, whose slots come first
    assert str(out) == "P(P(T(@3),@1),@2)"


def test_elements_must_be_normal():
    with pytest.raises(ValueError):
        OperadElement(terms.parse("P(@1,D)"))


def test_wrong_argument_count():
    with pytest.raises(ValueError):
        gamma_bar(E("P(@1,@2)"), [unit()])


@st.composite
def composable(draw, depth=2):
    F = draw(elements(max_arity=3))
    Gs = [draw(elements(max_arity=2)) for _ in range(F.arity)]
    Hs = [draw(elements(max_arity=2, max_genus=1)) for _ in range(sum(G.arity for G in Gs))]
    return F, Gs, Hs


def _blocks(Hs, Gs):
    out, pos = [], 0
    for G in Gs:
        out.append(Hs[pos:pos + G.arity])
        pos += G.arity
    return out


@given(composable())
def test_associativity(case):
    F, Gs, Hs = case
    lhs = gamma_bar(gamma_bar(F, Gs), Hs)
    rhs = gamma_bar(F, [gamma_bar(G, b) for G, b in zip(Gs, _blocks(Hs, Gs))])
    assert lhs == rhs


@given(composable())
def test_associativity_against_one_shot_grafting(case):
    F, Gs, Hs = case
    raw = graft_all(F.term, [graft_all(G.term, [h.term for h in b]) for G, b in zip(Gs, _blocks(Hs, Gs))])
    assert gamma_bar(gamma_bar(F, Gs), Hs).term == rewrite.normal_form(raw)


@given(elements(max_arity=4))
def test_unit_laws(F):
    assert gamma_bar(unit(), [F]) == F
    assert gamma_bar(F, [unit()] * F.arity) == F


@given(composable())
def test_genus_adds(case):
    F, Gs, _ = case
    assert gamma_bar(F, Gs).genus == F.genus + sum(G.genus for G in Gs)


@given(st.data())
def test_outer_equivariance(data):
    F = data.draw(elements(max_arity=3))
    Gs = [data.draw(elements(max_arity=2)) for _ in range(F.arity)]
    sigma = data.draw(permutations_of(F.arity))
    permuted = [Gs[sigma[i] - 1] for i in range(F.arity)]
    lhs = gamma_bar(sigma_act(F, sigma), Gs)
    rhs = sigma_act(gamma_bar(F, permuted), perms.block_permutation(sigma, [G.arity for G in permuted]))
    assert lhs == rhs


@given(st.data())
def test_inner_equivariance(data):
    F = data.draw(elements(max_arity=3))
    Gs = [data.draw(elements(max_arity=2)) for _ in range(F.arity)]
    taus = [data.draw(permutations_of(G.arity)) for G in Gs]
    lhs = gamma_bar(F, [sigma_act(G, t) for G, t in zip(Gs, taus)])
    assert lhs == sigma_act(gamma_bar(F, Gs), perms.direct_sum(*taus))


@given(st.data())
def test_sigma_action_is_an_action(data):
    F = data.draw(elements(max_arity=4))
    s, t = data.draw(permutations_of(F.arity)), data.draw(permutations_of(F.arity))
    assert sigma_act(sigma_act(F, t), s) == sigma_act(F, perms.compose(s, t))
    assert sigma_act(F, perms.identity(F.arity)) == F


# -- M-terms -----------------------------------------------------------------------


def test_mterm_puts_slots_in_planar_order():
    m = MTerm.make(E("P(@2,@1)"), ["a", "b"])
    assert str(m.top) == "P(@1,@2)" and m.leaves == ("b", "a")


def test_basepoint_leaves_are_capped():
    m = MTerm.make(E("P(@1,@2)"), [BASEPOINT, "x"])
    assert m.top == unit() and m.leaves == ("x",)


@given(elements(max_arity=3), st.data())
def test_mu_eta_units(top, data):
    leaves = [data.draw(st.sampled_from("xyz")) for _ in range(top.arity)]
    m = MTerm.make(top, leaves)
    assert mu_m(eta_m(m)) == m
    assert mu_m(m_map(eta_m, m)) == m


@given(st.data())
def test_mu_associative(data):
    def level(depth):
        top = data.draw(elements(max_arity=2, max_genus=1))
        if depth == 0:
            return MTerm.make(top, [data.draw(st.sampled_from("xy")) for _ in range(top.arity)])
        return MTerm.make(top, [level(depth - 1) for _ in range(top.arity)])

    z = level(2)
    assert mu_m(m_map(mu_m, z)) == mu_m(mu_m(z))
