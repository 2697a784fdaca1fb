"""Exhaustive and random generation of surface terms."""

from __future__ import annotations

import functools
import itertools
import random
from typing import Iterator

from . import perms
from .terms import DISC, Circle, Pants, Slot, Term, Torus, as_whole, map_labels, slot_labels

_HOLE = Slot(0)  # placeholder slot, labeled afterwards


@functools.lru_cache(maxsize=None)
def shapes(n: int) -> tuple[Term, ...]:
    """All unlabeled term shapes with exactly ``n`` nodes (holes carry label 0)."""
    if n < 1:
        return ()
    out: list[Term] = []
    if n == 1:
        out.extend([DISC, _HOLE])
    out.extend(Torus(c) for c in shapes(n - 1))
    for k in range(1, n - 1):
        for left in shapes(k):
            for right in shapes(n - 1 - k):
                out.append(Pants(left, right))
    return tuple(out)


def label_shape(shape: Term, labeling: perms.Perm) -> Term:
    """Give the i-th hole in planar order the label ``labeling[i - 1]``."""
    counter = itertools.count()
    order = list(labeling)

    def walk(t: Term) -> Term:
        if isinstance(t, Slot):
            return Slot(order[next(counter)])
        if isinstance(t, Torus):
            return Torus(walk(t.child))
        if isinstance(t, Pants):
            left = walk(t.left)
            return Pants(left, walk(t.right))
        return t

    return as_whole(walk(shape))


def terms_of_size(n: int) -> Iterator[Term]:
    """Every well-formed term with exactly ``n`` nodes, all labelings included."""
    for shape in shapes(n):
        k = len(slot_labels(shape))
        for labeling in perms.all_perms(k):
            yield label_shape(shape, labeling)


def terms_up_to(max_nodes: int) -> Iterator[Term]:
    for n in range(1, max_nodes + 1):
        yield from terms_of_size(n)


def random_shape(rng: random.Random, n: int, *, torus_weight: float = 0.25,
                 disc_weight: float = 0.3) -> Term:
    """A random shape with exactly ``n`` nodes."""
    if n == 1:
        return DISC if rng.random() < disc_weight else _HOLE
    if n == 2 or rng.random() < torus_weight:
        return Torus(random_shape(rng, n - 1, torus_weight=torus_weight, disc_weight=disc_weight))
    k = rng.randint(1, n - 2)
    return Pants(
        random_shape(rng, k, torus_weight=torus_weight, disc_weight=disc_weight),
        random_shape(rng, n - 1 - k, torus_weight=torus_weight, disc_weight=disc_weight),
    )


def random_term(rng: random.Random, n: int, **weights: float) -> Term:
    shape = random_shape(rng, n, **weights)
    k = len(slot_labels(shape))
    return label_shape(shape, perms.random_perm(k, rng))


def random_term_with(rng: random.Random, arity: int, genus: int, pants_extra: int = 0) -> Term:
    """A random term with prescribed arity and genus.

    ``pants_extra`` extra pants/disc pairs are thrown in to create redexes.
    """
    leaves: list[Term] = [_HOLE] * arity + [DISC] * pants_extra
    for _ in range(genus):
        if leaves and rng.random() < 0.5:
            i = rng.randrange(len(leaves))
            leaves[i] = Torus(leaves[i])
        else:
            leaves.append(Torus(DISC))
    if not leaves:
        leaves = [DISC]
    while len(leaves) > 1:
        i = rng.randrange(len(leaves) - 1)
        node: Term = Pants(leaves[i], leaves[i + 1])
        if rng.random() < 0.2:
            node = Pants(node, DISC) if rng.random() < 0.5 else Pants(DISC, node)
        leaves[i:i + 2] = [node]
    shape = leaves[0]
    return label_shape(shape, perms.random_perm(arity, rng))


@functools.lru_cache(maxsize=None)
def normal_shapes(arity: int, genus: int) -> tuple[Term, ...]:
    """Unlabeled shapes with no redex, ``arity`` holes and ``genus`` tori.

    A pants node never has a disc child and never has a pants node as its
    right child; everything else is allowed.
    """
    if arity < 0 or genus < 0:
        return ()
    out: list[Term] = []
    if (arity, genus) == (0, 0):
        out.append(DISC)
    if (arity, genus) == (1, 0):
        out.append(_HOLE)
    if genus:
        out.extend(Torus(c) for c in normal_shapes(arity, genus - 1))
    for k in range(arity + 1):
        for g in range(genus + 1):
            if (k, g) in ((0, 0), (arity, genus)):  # both children must be non-disc
                continue
            lefts = [t for t in normal_shapes(k, g) if t != DISC]
            rights = [t for t in normal_shapes(arity - k, genus - g) if t != DISC and not isinstance(t, Pants)]
            out.extend(Pants(a, b) for a in lefts for b in rights)
    return tuple(out)


def normal_terms(arity: int, genus: int) -> Iterator[Term]:
    """Every normal form of the given arity and genus, all labelings included."""
    for shape in normal_shapes(arity, genus):
        for labeling in perms.all_perms(arity):
            yield label_shape(shape, labeling)


def relabel_contiguous(t: Term) -> Term:
    """Renumber the labels of ``t`` to 1..n preserving their relative order."""
    labels = sorted(slot_labels(t))
    return map_labels(t, {v: i + 1 for i, v in enumerate(labels)})


__all__ = [
    "shapes", "label_shape", "terms_of_size", "terms_up_to", "random_shape",
    "random_term", "random_term_with", "relabel_contiguous", "normal_shapes", "normal_terms", "Circle",
]
