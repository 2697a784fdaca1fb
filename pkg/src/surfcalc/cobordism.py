"""The cobordism category S on objects.

Objects are natural numbers.  A morphism ``n -> m`` is an ordered list of
``m`` normal-form components; component ``j`` is the ``j``-th output and its
free slots are inputs, named by source labels.  The input lists of the
components partition ``{1..n}``.

Internally a component is stored as an ``OperadElement`` (slots labeled
``1..a``) together with the sorted list of source labels it consumes: the
slot labeled ``s`` is fed by ``inputs[s - 1]``.  Sorting makes the pair a
canonical representative, so equality is plain dataclass equality.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence

from . import perms, terms
from .operad import OperadElement, gamma_bar, unit
from .terms import Circle, Term


@dataclass(frozen=True)
class SMorphism:
    source: int
    target: int
    components: tuple[OperadElement, ...]
    inputs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.target or len(self.inputs) != self.target:
            raise ValueError(f"a morphism to {self.target} has exactly {self.target} components")
        used = sorted(x for ins in self.inputs for x in ins)
        if used != list(range(1, self.source + 1)):
            raise ValueError(f"inputs {self.inputs} do not partition 1..{self.source}")
        for comp, ins in zip(self.components, self.inputs):
            if comp.arity != len(ins):
                raise ValueError(f"component {comp} has arity {comp.arity} but {len(ins)} inputs")
            if list(ins) != sorted(ins):
                raise ValueError("inputs must be stored sorted; use SMorphism.build")

    @classmethod
    def build(cls, source: int, parts: Sequence[tuple[OperadElement, Sequence[int]]]) -> "SMorphism":
        """Canonicalize ``(component, feeding source labels)`` pairs."""
        comps, ins = [], []
        for comp, feed in parts:
            feed = tuple(feed)
            order = sorted(range(len(feed)), key=lambda s: feed[s])
            # slot s+1 moves to the rank of feed[s]
            rank = [0] * len(feed)
            for r, s in enumerate(order):
                rank[s] = r + 1
            comps.append(OperadElement(terms.relabel(comp.term, tuple(rank))) if feed else comp)
            ins.append(tuple(sorted(feed)))
        return cls(source, len(comps), tuple(comps), tuple(ins))

    @classmethod
    def from_terms(cls, source: int, components: Sequence[Term | str]) -> "SMorphism":
        """Components whose slot labels are source labels directly."""
        parts = []
        for c in components:
            t = terms.parse(c, check=False) if isinstance(c, str) else c
            feed = terms.slot_labels(t)
            local = {v: i + 1 for i, v in enumerate(sorted(feed))}
            elem = OperadElement.of(terms.as_whole(terms.map_labels(t, local)))
            parts.append((elem, sorted(feed)))
        return cls.build(source, parts)

    def component_terms(self) -> list[Term]:
        """Components with slots renamed to the source labels they consume."""
        out = []
        for comp, ins in zip(self.components, self.inputs):
            out.append(terms.map_labels(comp.term, {s + 1: v for s, v in enumerate(ins)}))
        return out

    @property
    def genus(self) -> int:
        return sum(c.genus for c in self.components)

    def __str__(self) -> str:
        return f"[{'; '.join(map(str, self.component_terms()))}] : {self.source} -> {self.target}"

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "components": [str(t) for t in self.component_terms()],
        }


_MORPHISM_RE = re.compile(r"^\s*\[(.*)\]\s*:\s*(\d+)\s*->\s*(\d+)\s*$", re.S)


def parse_morphism(text: str) -> SMorphism:
    m = _MORPHISM_RE.match(text)
    if not m:
        raise ValueError(f"expected '[c1; c2; ...] : n -> m', got {text!r}")
    body, n, k = m.group(1), int(m.group(2)), int(m.group(3))
    comps = [c for c in (s.strip() for s in body.split(";")) if c]
    f = SMorphism.from_terms(n, comps)
    if f.target != k:
        raise ValueError(f"declared target {k} but {f.target} components given")
    return f


def morphism_from_json(data: dict) -> SMorphism:
    f = SMorphism.from_terms(int(data["source"]), data["components"])
    if f.target != int(data["target"]):
        raise ValueError("target does not match component count")
    return f


def identity(n: int) -> SMorphism:
    return SMorphism(n, n, tuple(unit() for _ in range(n)), tuple((i,) for i in range(1, n + 1)))


class CompositionError(ValueError):
    pass


def compose(f: SMorphism, g: SMorphism) -> SMorphism:
    """``g`` after ``f``: glue the outputs of ``f`` into the inputs of ``g``."""
    if f.target != g.source:
        raise CompositionError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
    parts = []
    for comp, ins in zip(g.components, g.inputs):
        args = [f.components[b - 1] for b in ins]
        glued = gamma_bar(comp, args)
        feed = [x for b in ins for x in f.inputs[b - 1]]
        parts.append((glued, feed))
    return SMorphism.build(f.source, parts)


def tensor(f: SMorphism, g: SMorphism) -> SMorphism:
    shifted = tuple(tuple(x + f.source for x in ins) for ins in g.inputs)
    return SMorphism(f.source + g.source, f.target + g.target,
                     f.components + g.components, f.inputs + shifted)


def tensor_all(fs: Sequence[SMorphism]) -> SMorphism:
    out = identity(0)
    for f in fs:
        out = tensor(out, f)
    return out


def symmetry(sigma: perms.Perm) -> SMorphism:
    """Circles sending input ``i`` to output ``sigma(i)``."""
    sigma = perms.check_perm(sigma)
    inv = perms.inverse(sigma)
    n = len(sigma)
    return SMorphism(n, n, tuple(unit() for _ in range(n)), tuple((inv[j],) for j in range(n)))


def braiding(a: int, b: int) -> SMorphism:
    """The symmetry ``a + b -> b + a`` moving the first block past the second."""
    sigma = tuple(list(range(b + 1, a + b + 1)) + list(range(1, b + 1)))
    return symmetry(sigma)


def as_operad_element(f: SMorphism) -> OperadElement:
    if f.target != 1:
        raise ValueError(f"only morphisms to 1 are operad elements, got target {f.target}")
    return f.components[0]


def from_operad_element(elem: OperadElement) -> SMorphism:
    return SMorphism(elem.arity, 1, (elem,), (tuple(range(1, elem.arity + 1)),))


def pants() -> SMorphism:
    return from_operad_element(OperadElement.of("P(@1,@2)"))


def disc() -> SMorphism:
    return from_operad_element(OperadElement.of("D"))


def glue_left_leg(f: SMorphism) -> SMorphism:
    """``F`` glued into the first leg of the pants, a morphism ``1 -> 1``."""
    if (f.source, f.target) != (0, 1):
        raise ValueError("expected a morphism 0 -> 1")
    return compose(tensor(f, identity(1)), pants())


def pants_loop_identity(f: SMorphism) -> bool:
    """Capping the free leg of ``F`` glued into the pants gives back ``F``."""
    return compose(disc(), glue_left_leg(f)) == f


# -- nerve simplices ---------------------------------------------------------


@dataclass(frozen=True)
class NerveSimplex:
    """A chain ``n0 -> n1 -> ... -> nq`` of composable morphisms."""

    objects: tuple[int, ...]
    morphisms: tuple[SMorphism, ...]

    def __post_init__(self) -> None:
        if len(self.objects) != len(self.morphisms) + 1:
            raise ValueError("a q-simplex has q+1 objects and q morphisms")
        for k, f in enumerate(self.morphisms):
            if (f.source, f.target) != (self.objects[k], self.objects[k + 1]):
                raise CompositionError(f"morphism {k} does not fit the chain")

    @classmethod
    def chain(cls, morphisms: Sequence[SMorphism], start: int | None = None) -> "NerveSimplex":
        morphisms = tuple(morphisms)
        if not morphisms:
            if start is None:
                raise ValueError("a 0-simplex needs its object")
            return cls((start,), ())
        objs = [morphisms[0].source] + [f.target for f in morphisms]
        return cls(tuple(objs), morphisms)

    @property
    def degree(self) -> int:
        return len(self.morphisms)

    def face(self, i: int) -> "NerveSimplex":
        q = self.degree
        if not 0 <= i <= q or q == 0:
            raise IndexError(f"face {i} of a {q}-simplex")
        objs = self.objects[:i] + self.objects[i + 1:]
        ms = list(self.morphisms)
        if i == 0:
            ms = ms[1:]
        elif i == q:
            ms = ms[:-1]
        else:
            ms[i - 1:i + 1] = [compose(ms[i - 1], ms[i])]
        return NerveSimplex(objs, tuple(ms))

    def degeneracy(self, i: int) -> "NerveSimplex":
        q = self.degree
        if not 0 <= i <= q:
            raise IndexError(f"degeneracy {i} of a {q}-simplex")
        objs = self.objects[:i + 1] + self.objects[i:]
        ms = self.morphisms[:i] + (identity(self.objects[i]),) + self.morphisms[i:]
        return NerveSimplex(objs, ms)

    def act(self, theta: Sequence[int]) -> "NerveSimplex":
        """Pull back along an order-preserving ``theta: [q'] -> [q]``."""
        objs = tuple(self.objects[v] for v in theta)
        ms = []
        for a, b in zip(theta, theta[1:]):
            f = identity(self.objects[a])
            for k in range(a, b):
                f = compose(f, self.morphisms[k])
            ms.append(f)
        return NerveSimplex(objs, tuple(ms))

    @property
    def is_basepoint(self) -> bool:
        """Every object is 0, so every morphism is the identity of 0."""
        return all(n == 0 for n in self.objects)

    def __str__(self) -> str:
        if not self.morphisms:
            return str(self.objects[0])
        return " ; ".join(str(f) for f in self.morphisms)


def base_chain(degree: int) -> NerveSimplex:
    return NerveSimplex((0,) * (degree + 1), (identity(0),) * degree)


def nerve_simplex(chain: Sequence[SMorphism], start: int | None = None) -> NerveSimplex:
    return NerveSimplex.chain(chain, start)


# -- random morphisms ---------------------------------------------------------


def random_morphism(rng: random.Random, source: int, target: int, *,
                    max_genus: int = 2, extra: int = 2) -> SMorphism:
    """A random morphism; ``extra`` bounds the pants/disc padding per component."""
    from . import gen

    if target == 0:
        if source:
            raise ValueError("the only morphism to 0 is the identity of 0")
        return identity(0)
    labels = list(range(1, source + 1))
    rng.shuffle(labels)
    cuts = sorted(rng.randint(0, source) for _ in range(target - 1))
    groups = [labels[a:b] for a, b in zip([0] + cuts, cuts + [source])]
    parts = []
    for grp in groups:
        t = gen.random_term_with(rng, len(grp), rng.randint(0, max_genus), rng.randint(0, extra))
        parts.append((OperadElement.of(t), grp))
    return SMorphism.build(source, parts)


__all__ = [
    "SMorphism", "identity", "compose", "tensor", "tensor_all", "symmetry", "braiding",
    "as_operad_element", "from_operad_element", "pants", "disc", "glue_left_leg",
    "pants_loop_identity", "NerveSimplex", "nerve_simplex", "parse_morphism",
    "morphism_from_json", "random_morphism", "CompositionError", "base_chain",
]
