import pytest

from surfcalc.rectify import bar as B
from surfcalc.simplicial.nerve import FiniteCategory, linear_order

CASES = {c.name: c for c in B.bar_cases()}


def bar(name, y, r=0, projected=False):
    c = CASES[name]
    return B.BarConstruction(c.category, c.functor, y, r, projected=projected)


def counts(X, top=2):
    return [X.count(q) for q in range(top + 1)]


# Frozen from direct enumeration of the coproduct.
@pytest.mark.parametrize("name, y, r, projected, expected", [
    ("interval", 1, 0, False, [12, 18, 24]),
    ("interval", 1, 1, False, [18, 27, 36]),
    ("interval", 1, 0, True, [9, 15, 21]),
    ("interval", 1, 1, True, [12, 21, 30]),
    ("interval", 0, 0, False, [3, 3, 3]),
    ("poset-2", 2, 0, False, [6, 10, 15]),
    ("dtilde-1", ("E", 0), 0, False, [10, 38, 142]),
    ("dtilde-1", ("F", 1), 0, False, [32, 186, 944]),
    ("dtilde-1", ("F", 1), 0, True, [28, 172, 892]),
    ("dtilde-1", ("F", 1), 1, False, [40, 246, 1280]),
    ("dtilde-1", ("F", 1), 1, True, [28, 204, 1124]),
])
def test_simplex_counts(name, y, r, projected, expected):
    X = bar(name, y, r, projected)
    assert counts(X) == expected
    assert [sum(1 for _ in X.simplices(q)) for q in range(3)] == expected


@pytest.mark.parametrize("y, r", [(0, 0), (1, 0), (1, 1), (1, 2)])
def test_interval_closed_form(y, r):
    assert counts(bar("interval", y, r, True), 3) == [B.interval_count(y, q, r) for q in range(4)]


def test_evaluation_after_inclusion_is_identity():
    X = bar("interval", 0)
    values = CASES["interval"].functor.values(0, 0)
    assert len(values) == 3
    for a in values:
        assert X.evaluation(X.inclusion(a)) == a
        assert X.evaluation(X.inclusion(a, 2)) == a


@pytest.mark.parametrize("name", sorted(CASES))
@pytest.mark.parametrize("r", [0, 1])
def test_may_homotopy(name, r):
    for y in CASES[name].objects:
        X = bar(name, y, r)
        rep = X.check_homotopy(2)
        assert rep.ok, rep.witness
        assert rep.checked > 0
        for q in range(3):
            for x in X.simplices(q):
                for j in range(q + 1):
                    assert X.homotopy(j, x) == X.homotopy_closed_form(j, x)


@pytest.mark.parametrize("name", sorted(CASES))
def test_bar_is_simplicial(name):
    for y in CASES[name].objects:
        for projected in (False, True):
            X = bar(name, y, 0, projected)
            assert B.simplicial_identity_failures(X, X.simplices, 2) == []
        assert B.internal_compatibility_failures(bar(name, y, 0), 1) == []


@pytest.mark.parametrize("name", sorted(CASES))
def test_category_axioms(name):
    for r in (0, 1, 2):
        assert B.category_failures(CASES[name].category, r) == []


def test_checker_rejects_a_wrong_homotopy():
    class Constant(B.BarConstruction):
        def homotopy(self, j, x):
            return self.degeneracy(x, j)

    c = CASES["interval"]
    rep = Constant(c.category, c.functor, 1).check_homotopy(1)
    assert not rep.ok and rep.witness["identity"] == "d0 h0 = f"


def test_size_guard():
    c = CASES["dtilde-1"]
    X = B.BarConstruction(c.category, c.functor, ("F", 1), max_simplices=100)
    with pytest.raises(B.SizeGuardError):
        next(X.simplices(2))


def test_functor_tables():
    C = B.DiscreteEnriched(linear_order(1))
    m = next(k for k in C.category.morphisms if not C.category.is_identity(k))
    good = B.TableFunctor.from_json({"values": {0: ["a"], 1: ["b", "c"]}, "maps": {m: {"a": "c"}}})
    assert B.functor_failures(C, good) == []
    idem = FiniteCategory(["x"], {"e": ("x", "x")}, {("e", "e"): "e"})
    bad = B.TableFunctor({"x": [0, 1]}, {"e": {0: 1, 1: 0}})
    assert B.functor_failures(B.DiscreteEnriched(idem), bad)
