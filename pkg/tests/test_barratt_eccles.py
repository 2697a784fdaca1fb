import random

from hypothesis import given
from hypothesis import strategies as st

from surfcalc import perms
from surfcalc.operad import BASEPOINT
from surfcalc.simplicial import barratt_eccles as BE
from surfcalc.simplicial.sset import circle_model, sphere0


class Letters:
    """Discrete pointed carrier: strings, with ``BASEPOINT`` as basepoint."""

    @staticmethod
    def is_basepoint(x):
        return x is BASEPOINT

    @staticmethod
    def face(x, i):
        return x

    @staticmethod
    def degeneracy(x, i):
        return x


@st.composite
def nested(draw, degree=None):
    r = draw(st.integers(0, 2)) if degree is None else degree
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    inner = [g for g in (BE.random_gamma(rng, list("abc"), r, 3) for _ in range(5)) if g.points]
    return BE.random_gamma(rng, inner, r, 3)


@given(nested())
def test_flatten_agrees_with_block_composition(w):
    assert BE.mu_gamma(w) == BE.mu_gamma_blocks(w)


@given(nested())
def test_flatten_keeps_every_point(w):
    flat = BE.mu_gamma(w)
    assert sorted(flat.points) == sorted(p for g in w.points for p in g.points)
    assert flat.orders[0] == perms.identity(flat.arity)


def test_basepoints_are_deleted():
    x = BE.gamma_element(["a", BASEPOINT, "b"], [(2, 3, 1), (1, 2, 3)], Letters)
    assert x.points == ("b", "a") and x.orders == ((1, 2), (2, 1))


def test_e_sigma_faces_and_action():
    s = BE.BESimplex(2, ((1, 2), (2, 1), (1, 2)))
    assert s.face(1) == BE.BESimplex(2, ((1, 2), (1, 2)))
    assert s.face(1).is_degenerate and not s.is_degenerate
    assert s.act((2, 1)) == BE.BESimplex(2, ((2, 1), (1, 2), (2, 1)))


def test_be_composition_is_degreewise():
    outer = BE.BESimplex(2, ((1, 2), (2, 1)))
    inner = [BE.BESimplex(1, ((1,), (1,))), BE.BESimplex(2, ((1, 2), (2, 1)))]
    out = BE.operad_compose_be(outer, inner)
    assert out.perms == (perms.operad_compose((1, 2), [(1,), (1, 2)]), perms.operad_compose((2, 1), [(1,), (2, 1)]))


def test_monad_laws_on_the_zero_sphere():
    rep = BE.monad_law_audit(sphere0(), max_arity=2, max_degree=1)
    assert rep.ok, rep.failures
    assert set(rep.checked) >= {"mu eta = id", "mu Gamma(eta) = id", "associativity", "flatten oracle"}


def test_monad_laws_on_the_circle_in_degree_zero():
    assert BE.monad_law_audit(circle_model(), max_arity=2, max_degree=0).ok


def test_assembly_formula_example():
    A, B = circle_model(), sphere0()
    left, right = BE.SSetCarrier(A), BE.SSetCarrier(B)
    y = next(s for s in A.simplices(1) if s.base == "y1" and not s.is_degenerate)
    x_point = [s for s in B.simplices(1) if not B.is_basepoint(s)][0]
    x = BE.GammaElement((x_point,), ((1,), (1,)))
    out = BE.assembly(y, x, left, right)
    assert out.orders == x.orders and out.points == ((y, x_point),)


def test_assembly_audit():
    rep = BE.assembly_audit(count=25, seed=1)
    assert rep.ok, rep.failures
    assert rep.checked["assembly naturality"] == 50


def test_gamma_of_the_zero_sphere_is_a_simplicial_set():
    Y, _ = BE.gamma_monad(sphere0(), 2, 2)
    assert Y.audit(2) == []
