"""Hypothesis strategies shared by the test modules."""

import random

from hypothesis import strategies as st

from surfcalc import gen, perms, terms
from surfcalc.operad import OperadElement
from surfcalc.terms import DISC, Pants, Slot, Torus

HOLE = Slot(0)

shapes = st.recursive(
    st.sampled_from([DISC, HOLE]),
    lambda kids: st.one_of(st.builds(Torus, kids), st.builds(Pants, kids, kids)),
    max_leaves=10,
)


@st.composite
def whole_terms(draw, shape_strategy=shapes):
    shape = draw(shape_strategy)
    k = len(terms.slot_labels(shape))
    labeling = draw(st.permutations(range(1, k + 1)))
    return gen.label_shape(shape, tuple(labeling))


@st.composite
def elements(draw, arity=None, max_arity=3, max_genus=2, max_extra=2):
    """Operad elements built from a random term of the given arity."""
    k = draw(st.integers(0, max_arity)) if arity is None else arity
    g = draw(st.integers(0, max_genus))
    extra = draw(st.integers(0, max_extra))
    seed = draw(st.integers(0, 2**32 - 1))
    return OperadElement.of(gen.random_term_with(random.Random(seed), k, g, extra))


def permutations_of(n: int):
    return st.permutations(range(1, n + 1)).map(tuple)


@st.composite
def operator_words(draw, max_p=6, max_len=5, p=None):
    """``(word, p)`` with the word valid on degree ``p``, written leftmost-last."""
    p = draw(st.integers(0, max_p)) if p is None else p
    length = draw(st.integers(0, max_len))
    applied, deg = [], p
    for _ in range(length):
        kind = draw(st.sampled_from("ds")) if deg >= 1 else "s"
        applied.append((kind, draw(st.integers(0, deg))))
        deg += -1 if kind == "d" else 1
    return list(reversed(applied)), p


@st.composite
def morphism_chain(draw, length=3, max_objects=3, max_genus=2):
    """Composable random morphisms of S, ``length`` of them."""
    from surfcalc import cobordism as S

    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    objs = [draw(st.integers(0, max_objects))]
    for _ in range(length):
        objs.append(draw(st.integers(0 if objs[-1] == 0 else 1, max_objects)))
    return [S.random_morphism(rng, a, b, max_genus=max_genus) for a, b in zip(objs, objs[1:])]


__all__ = ["shapes", "whole_terms", "elements", "permutations_of", "operator_words", "morphism_chain", "perms"]
