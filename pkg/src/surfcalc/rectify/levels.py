"""Levels of an element of ``M^d(X)`` and the gluings between them.

Level ``d`` is the outermost surface, level ``k`` lists the ``m_k`` surfaces
one step in, and level 0 lists the ``m_0`` pairs ``(F, G)`` of closed
surfaces.  The surfaces of level ``k`` taken side by side form a morphism
``F_k : m_{k-1} -> m_k`` of S; level 0 gives two morphisms ``F_0, G_0 : 0 -> m_0``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Sequence

from .. import cobordism as S
from ..cobordism import SMorphism
from ..operad import MTerm, OperadElement, gamma_bar


class LevelError(ValueError):
    pass


@dataclass(frozen=True)
class LevelDecomposition:
    levels: tuple[tuple[OperadElement, ...], ...]  # levels[k - 1] is level k, for k = 1..d
    pairs: tuple[tuple[OperadElement, OperadElement], ...]  # level 0

    def __post_init__(self) -> None:
        below = len(self.pairs)
        for k, level in enumerate(self.levels, start=1):
            total = sum(e.arity for e in level)
            if total != below:
                raise LevelError(f"level {k} has {total} slots but level {k - 1} has {below} items")
            below = len(level)
        for F, G in self.pairs:
            if F.arity or G.arity:
                raise LevelError("level 0 holds closed surfaces only")

    @property
    def depth(self) -> int:
        return len(self.levels)

    def counts(self) -> list[int]:
        """``m_0, ..., m_d``."""
        return [len(self.pairs)] + [len(level) for level in self.levels]

    @classmethod
    def from_mterm(cls, m: Any, d: int) -> "LevelDecomposition":
        """Read the levels off a nested ``M``-term of depth ``d``."""
        layers: list[list[OperadElement]] = []
        items = [m]
        for _ in range(d):
            if any(not isinstance(x, MTerm) for x in items):
                raise LevelError("nesting is shallower than the requested depth")
            layers.append([x.top for x in items])
            items = [y for x in items for y in x.leaves]
        pairs = []
        for x in items:
            if not (isinstance(x, tuple) and len(x) == 2):
                raise LevelError(f"level 0 item {x!r} is not a pair of surfaces")
            pairs.append(x)
        return cls(tuple(tuple(layer) for layer in reversed(layers)), tuple(pairs))

    def to_mterm(self) -> Any:
        items: list[Any] = list(self.pairs)
        for level in self.levels:
            nxt, pos = [], 0
            for e in level:
                nxt.append(MTerm.make(e, items[pos:pos + e.arity]))
                pos += e.arity
            items = nxt
        if len(items) != 1:
            raise LevelError("the top level must be a single surface")
        return items[0]


def level_morphism(L: LevelDecomposition, k: int) -> SMorphism:
    """``F_k`` for ``k >= 1``."""
    return S.tensor_all([S.from_operad_element(e) for e in L.levels[k - 1]])


def base_morphisms(L: LevelDecomposition) -> tuple[SMorphism, SMorphism]:
    """``F_0`` and ``G_0 : 0 -> m_0``."""
    Fs = S.tensor_all([S.from_operad_element(F) for F, _ in L.pairs])
    Gs = S.tensor_all([S.from_operad_element(G) for _, G in L.pairs])
    return Fs, Gs


def _chain(start: SMorphism, morphisms: Sequence[SMorphism]) -> SMorphism:
    out = start
    for f in morphisms:
        out = S.compose(out, f)
    return out


@dataclass
class LevelGluings:
    F: dict[int, SMorphism]  # F_{k,0}
    G: dict[int, SMorphism]  # G_{k,0}
    H: dict[tuple[int, int], SMorphism]  # H_{k,l}, 0 <= l < k


def level_gluings(L: LevelDecomposition) -> LevelGluings:
    F0, G0 = base_morphisms(L)
    steps = [level_morphism(L, k) for k in range(1, L.depth + 1)]
    F = {0: F0}
    G = {0: G0}
    for k in range(1, L.depth + 1):
        F[k] = S.compose(F[k - 1], steps[k - 1])
        G[k] = S.compose(G[k - 1], steps[k - 1])
    H = {}
    for k in range(1, L.depth + 1):
        for l in range(k):
            H[(k, l)] = _chain(steps[l], steps[l + 1:k])
    return LevelGluings(F, G, H)


def glued_directly(L: LevelDecomposition, k: int, side: int) -> SMorphism:
    """``F_{k,0}`` (side 0) or ``G_{k,0}`` (side 1) by gluing each tree with the operad maps."""
    items = [pair[side] for pair in L.pairs]
    for level in L.levels[:k]:
        nxt, pos = [], 0
        for e in level:
            nxt.append(gamma_bar(e, items[pos:pos + e.arity]))
            pos += e.arity
        items = nxt
    return S.tensor_all([S.from_operad_element(x) for x in items])


def coherence_failures(L: LevelDecomposition) -> list[str]:
    """``H_{k,l} o F_{l,0} = F_{k,0}`` and the same for ``G``, against direct gluing."""
    gl = level_gluings(L)
    out = []
    for k in range(L.depth + 1):
        if gl.F[k] != glued_directly(L, k, 0):
            out.append(f"F_{k},0 differs from the direct gluing")
        if gl.G[k] != glued_directly(L, k, 1):
            out.append(f"G_{k},0 differs from the direct gluing")
    for (k, l), H in gl.H.items():
        if S.compose(gl.F[l], H) != glued_directly(L, k, 0):
            out.append(f"H_{k},{l} o F_{l},0 != F_{k},0")
        if S.compose(gl.G[l], H) != glued_directly(L, k, 1):
            out.append(f"H_{k},{l} o G_{l},0 != G_{k},0")
    return out


def random_decomposition(rng: random.Random, depth: int, max_arity: int = 3,
                         max_genus: int = 1) -> LevelDecomposition:
    """Built top-down: one surface at level ``depth``, arities at most ``max_arity``."""
    from .. import gen

    def surface(arity: int) -> OperadElement:
        return OperadElement.of(gen.random_term_with(rng, arity, rng.randint(0, max_genus), rng.randint(0, 1)))

    def closed() -> OperadElement:
        return surface(0)

    levels: list[list[OperadElement]] = []
    count = 1
    for _ in range(depth):
        layer = [surface(rng.randint(0, max_arity)) for _ in range(count)]
        levels.append(layer)
        count = sum(e.arity for e in layer)
    if depth == 0:
        count = rng.randint(0, max_arity)
    pairs = tuple((closed(), closed()) for _ in range(count))
    return LevelDecomposition(tuple(tuple(layer) for layer in reversed(levels)), pairs)
