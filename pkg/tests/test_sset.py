import itertools

import pytest

from surfcalc.simplicial import homotopy as H
from surfcalc.simplicial import nerve as N
from surfcalc.simplicial import sset as SS
from surfcalc.simplicial.barratt_eccles import e_sigma, freeness_audit


def nondeg(X, top):
    return [len(X.nondegenerate(q)) for q in range(top + 1)]


def test_circle_model():
    C = SS.circle_model()
    assert nondeg(C, 3) == [2, 2, 0, 0]
    assert C.euler_characteristic() == 0
    assert C.audit(4) == []


def test_smash_with_zero_sphere():
    X = SS.smash(SS.circle_model(), SS.sphere0())
    assert len(X.nondegenerate(1)) == 2
    assert X.audit(3) == []


def test_smash_of_circles():
    X = SS.smash(SS.circle_model(), SS.circle_model())
    assert [X.count(q) for q in range(4)] == [2, 10, 26, 50]
    assert X.audit(3) == []


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_standard_simplex_counts(n):
    X = SS.standard_simplex(n)
    # q-simplices are monotone maps [q] -> [n]
    assert [X.count(q) for q in range(4)] == [len(list(itertools.combinations_with_replacement(range(n + 1), q + 1)))
                                             for q in range(4)]
    assert X.audit(3) == []


def test_product_audit():
    X = SS.product(SS.standard_simplex(1), SS.standard_simplex(1))
    assert nondeg(X, 2) == [4, 5, 2]
    assert X.audit(3) == []


def test_nerve_of_two_step_order():
    X = N.nerve(N.linear_order(2))
    assert nondeg(X, 2) == [3, 3, 1]
    assert X.audit(3) == []


def test_nerve_needs_a_bound_for_idempotents():
    C = N.monoid_category(["e", "u"], {("u", "u"): "u"}, "e")
    with pytest.raises(N.CategoryError):
        N.nerve(C)
    assert N.nerve(C, 3).audit(3) == []


def test_category_json_round_trip():
    C = N.linear_order(2)
    assert N.FiniteCategory.from_json(C.to_json()).to_json() == C.to_json()


def test_bad_face_table_is_rejected():
    with pytest.raises(ValueError):
        SS.from_simplices({"e": ["a"]}, {"a": 0, "e": 1})


def test_json_round_trip():
    X = SS.boundary_circle()
    Y = SS.FiniteSimplicialSet.from_json(X.to_json())
    assert Y.to_json() == X.to_json()


def test_pointed_self_maps_of_the_circle():
    maps = SS.enumerate_maps(SS.circle_model(), SS.circle_model())
    assert len(maps) == 5
    assert all(not m.problems() for m in maps)


def test_e_sigma_counts_and_freeness():
    X = e_sigma(2, 1)
    assert (X.count(0), X.count(1)) == (2, 4)
    res = freeness_audit(3, 2)
    assert {q: (v["simplices"], v["orbits"]) for q, v in res.items()} == {0: (6, 1), 1: (36, 6), 2: (216, 36)}
    assert all(v["free"] for v in res.values())


# -- the homotopy checker -------------------------------------------------------------


class Sequences:
    """Monotone sequences, the simplices of a standard simplex."""

    @staticmethod
    def face(x, i):
        return x[:i] + x[i + 1:]

    @staticmethod
    def degeneracy(x, i):
        return x[:i + 1] + x[i:]


def sequences(n):
    return lambda q: list(itertools.combinations_with_replacement(range(n + 1), q + 1))


def test_checker_accepts_the_cone_contraction():
    # contraction onto the top vertex: keep x_0..x_j, then repeat the top vertex
    h = lambda j, x: x[:j + 1] + (2,) * (len(x) - j)
    rep = H.check_simplicial_homotopy(h, lambda x: (2,) * len(x), lambda x: x, Sequences, Sequences, sequences(2), 3)
    assert rep.ok and rep.checked > 0


def test_checker_reports_a_witness():
    h = lambda j, x: x[:j] + (2,) * (len(x) - j + 1)
    rep = H.check_simplicial_homotopy(h, lambda x: (2,) * len(x), lambda x: x, Sequences, Sequences, sequences(2), 3)
    assert not rep.ok and rep.witness["identity"]


def test_constant_homotopy():
    ident = lambda x: x
    rep = H.check_simplicial_homotopy(H.constant_homotopy(ident, Sequences), ident, ident, Sequences, Sequences,
                                      sequences(2), 3)
    assert rep.ok
