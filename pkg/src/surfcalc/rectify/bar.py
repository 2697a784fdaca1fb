"""The two-sided bar construction for a functor on a simplicially enriched category.

Morphism spaces are simplicial sets, so the bar object is bisimplicial: the
bar degree ``q`` and the internal degree ``r``.  Everything here works one
internal degree at a time, where the category is an ordinary finite
category.  A ``q``-simplex of the bar object at ``y`` is::

    (a ; g_1, ..., g_q ; u)    a in F(y_0),  g_k : y_{k-1} -> y_k,  u : y_q -> y

In the projected version the tail ``u`` lives in the strict quotient
category instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterator, Protocol, Sequence

from ..simplicial.homotopy import HomotopyReport, check_simplicial_homotopy


class SizeGuardError(RuntimeError):
    """The enumeration would exceed the configured simplex budget."""


class EnrichedCategory(Protocol):
    objects: Sequence[Hashable]

    def hom(self, x: Hashable, y: Hashable, r: int) -> list: ...
    def compose(self, g: Any, f: Any) -> Any: ...  # g after f
    def identity(self, x: Hashable, r: int) -> Any: ...
    def hom_face(self, g: Any, i: int) -> Any: ...
    def hom_degeneracy(self, g: Any, i: int) -> Any: ...
    def project(self, g: Any) -> Hashable: ...
    def base_hom(self, x: Hashable, y: Hashable) -> list: ...
    def base_compose(self, g: Hashable, f: Hashable) -> Hashable: ...


class EnrichedFunctor(Protocol):
    def values(self, y: Hashable, r: int) -> list: ...
    def act(self, g: Any, a: Any) -> Any: ...
    def face(self, a: Any, i: int) -> Any: ...
    def degeneracy(self, a: Any, i: int) -> Any: ...


@dataclass(frozen=True)
class BarSimplex:
    objects: tuple  # y_0 .. y_q
    a: Any
    morphisms: tuple  # g_1 .. g_q
    tail: Any  # u

    @property
    def degree(self) -> int:
        return len(self.morphisms)

    def __str__(self) -> str:
        inner = ", ".join(map(str, self.morphisms))
        return f"({self.a} ; {inner} ; {self.tail})"


class BarConstruction:
    """One internal degree ``r`` of the bar object at ``y``.

    With ``projected=False`` this is the version whose tail is a morphism of
    the enriched category; there the inclusion ``i``, the evaluation ``d``
    and the homotopy ``h`` are available.  With ``projected=True`` the tail
    is a morphism of the strict quotient and ``y`` names an object of it.
    """

    def __init__(self, category: EnrichedCategory, functor: EnrichedFunctor, y: Hashable, r: int = 0,
                 projected: bool = False, max_simplices: int = 200_000):
        self.C, self.F, self.y, self.r = category, functor, y, r
        self.projected = projected
        self.max_simplices = max_simplices

    # -- structure ----------------------------------------------------------

    def _tails(self, yq: Hashable) -> list:
        if self.projected:
            return self.C.base_hom(yq, self.y)
        return self.C.hom(yq, self.y, self.r)

    def _compose_tail(self, u: Any, g: Any) -> Any:
        if self.projected:
            return self.C.base_compose(u, self.C.project(g))
        return self.C.compose(u, g)

    def face(self, x: BarSimplex, i: int) -> BarSimplex:
        q = x.degree
        if not 0 <= i <= q or q == 0:
            raise IndexError(f"face {i} of a {q}-simplex")
        objs = x.objects[:i] + x.objects[i + 1:]
        gs = list(x.morphisms)
        a, u = x.a, x.tail
        if i == 0:
            a = self.F.act(gs[0], a)
            gs = gs[1:]
        elif i == q:
            u = self._compose_tail(u, gs[-1])
            gs = gs[:-1]
        else:
            gs[i - 1:i + 1] = [self.C.compose(gs[i], gs[i - 1])]
        return BarSimplex(objs, a, tuple(gs), u)

    def degeneracy(self, x: BarSimplex, i: int) -> BarSimplex:
        q = x.degree
        if not 0 <= i <= q:
            raise IndexError(f"degeneracy {i} of a {q}-simplex")
        ident = self.C.identity(x.objects[i], self.r)
        return BarSimplex(x.objects[:i + 1] + x.objects[i:], x.a,
                          x.morphisms[:i] + (ident,) + x.morphisms[i:], x.tail)

    def internal_face(self, x: BarSimplex, i: int) -> BarSimplex:
        tail = x.tail if self.projected else self.C.hom_face(x.tail, i)
        return BarSimplex(x.objects, self.F.face(x.a, i),
                          tuple(self.C.hom_face(g, i) for g in x.morphisms), tail)

    def internal_degeneracy(self, x: BarSimplex, i: int) -> BarSimplex:
        tail = x.tail if self.projected else self.C.hom_degeneracy(x.tail, i)
        return BarSimplex(x.objects, self.F.degeneracy(x.a, i),
                          tuple(self.C.hom_degeneracy(g, i) for g in x.morphisms), tail)

    def at_degree(self, r: int) -> "BarConstruction":
        return BarConstruction(self.C, self.F, self.y, r, self.projected, self.max_simplices)

    # -- enumeration ---------------------------------------------------------

    def count(self, q: int) -> int:
        """Size of the coproduct, from the factor sizes alone."""
        total = 0
        for objs in itertools.product(self.C.objects, repeat=q + 1):
            n = len(self.F.values(objs[0], self.r))
            for s, t in zip(objs, objs[1:]):
                n *= len(self.C.hom(s, t, self.r))
                if not n:
                    break
            total += n * len(self._tails(objs[-1])) if n else 0
        return total

    def simplices(self, q: int) -> Iterator[BarSimplex]:
        n = self.count(q)
        if n > self.max_simplices:
            raise SizeGuardError(f"{n} simplices in bar degree {q} exceed the budget {self.max_simplices}")
        for objs in itertools.product(self.C.objects, repeat=q + 1):
            homs = [self.C.hom(s, t, self.r) for s, t in zip(objs, objs[1:])]
            for a in self.F.values(objs[0], self.r):
                for gs in itertools.product(*homs):
                    for u in self._tails(objs[-1]):
                        yield BarSimplex(tuple(objs), a, tuple(gs), u)

    # -- i, d, h --------------------------------------------------------------

    def _need_unprojected(self) -> None:
        if self.projected:
            raise ValueError("i, d and h live on the unprojected bar object")

    def inclusion(self, a: Any, q: int = 0) -> BarSimplex:
        """``a -> (a ; id_y)``, taken through ``q`` degeneracies."""
        self._need_unprojected()
        ident = self.C.identity(self.y, self.r)
        return BarSimplex((self.y,) * (q + 1), a, (ident,) * q, ident)

    def evaluation(self, x: BarSimplex) -> Any:
        self._need_unprojected()
        a = x.a
        for g in x.morphisms:
            a = self.F.act(g, a)
        return self.F.act(x.tail, a)

    def eta(self, x: BarSimplex) -> BarSimplex:
        """Append ``id_y`` on the right: the old tail becomes the last morphism."""
        self._need_unprojected()
        return BarSimplex(x.objects + (self.y,), x.a, x.morphisms + (x.tail,), self.C.identity(self.y, self.r))

    def homotopy(self, j: int, x: BarSimplex) -> BarSimplex:
        """``h_j = s_q ... s_{j+1} o eta o d_{j+1} ... d_q`` on a ``q``-simplex."""
        q = x.degree
        z = x
        for i in range(q, j, -1):  # d_q first
            z = self.face(z, i)
        z = self.eta(z)
        for i in range(j + 1, q + 1):  # s_{j+1} first
            z = self.degeneracy(z, i)
        return z

    def homotopy_closed_form(self, j: int, x: BarSimplex) -> BarSimplex:
        """``(a ; g_1..g_j, u g_q .. g_{j+1}, id, .., id ; id)``, written out directly."""
        q = x.degree
        u = x.tail
        for g in reversed(x.morphisms[j:]):
            u = self.C.compose(u, g)
        ident = self.C.identity(self.y, self.r)
        objs = x.objects[:j + 1] + (self.y,) * (q - j + 1)
        return BarSimplex(objs, x.a, x.morphisms[:j] + (u,) + (ident,) * (q - j), ident)

    def check_homotopy(self, max_degree: int = 2) -> HomotopyReport:
        """May's family from ``i o d`` to the identity."""
        self._need_unprojected()
        return check_simplicial_homotopy(
            self.homotopy,
            lambda x: self.inclusion(self.evaluation(x), x.degree),
            lambda x: x,
            self, self, self.simplices, max_degree,
        )


# -- audits --------------------------------------------------------------------------


def simplicial_identity_failures(obj: Any, simplices: Callable[[int], Iterator], max_degree: int,
                                 face: Callable | None = None, degeneracy: Callable | None = None,
                                 limit: int = 5) -> list[str]:
    """The five simplicial identities on every simplex of degree ``<= max_degree``."""
    d = face or obj.face
    s = degeneracy or obj.degeneracy
    out: list[str] = []

    def bad(msg: str) -> bool:
        out.append(msg)
        return len(out) >= limit

    for q in range(max_degree + 1):
        for x in simplices(q):
            for i in range(q + 1):
                for j in range(q + 1):
                    if q >= 2 and i < j and d(d(x, j), i) != d(d(x, i), j - 1):
                        if bad(f"d{i} d{j} on {x}"):
                            return out
                    if i <= j and s(s(x, j), i) != s(s(x, i), j + 1):
                        if bad(f"s{i} s{j} on {x}"):
                            return out
                for j in range(q + 1):
                    y = s(x, j)
                    for i in range(q + 2):
                        if i < j:
                            ok = d(y, i) == s(d(x, i), j - 1)
                        elif i in (j, j + 1):
                            ok = d(y, i) == x
                        else:
                            ok = d(y, i) == s(d(x, i - 1), j)
                        if not ok and bad(f"d{i} s{j} on {x}"):
                            return out
    return out


def internal_compatibility_failures(bar: BarConstruction, max_q: int = 2, limit: int = 5) -> list[str]:
    """Bar faces, degeneracies and ``h`` commute with the internal faces and degeneracies."""
    out: list[str] = []
    r = bar.r
    if r == 0:
        return out
    below = bar.at_degree(r - 1)
    for q in range(max_q + 1):
        for x in bar.simplices(q):
            for k in range(r + 1):
                dx = bar.internal_face(x, k)
                checks = []
                for i in range(q + 1):
                    if q:
                        checks.append((f"d{i}", below.face(dx, i), bar.internal_face(bar.face(x, i), k)))
                    checks.append((f"s{i}", below.degeneracy(dx, i), bar.internal_face(bar.degeneracy(x, i), k)))
                    if not bar.projected:
                        checks.append((f"h{i}", below.homotopy(i, dx), bar.internal_face(bar.homotopy(i, x), k)))
                for name, lhs, rhs in checks:
                    if lhs != rhs:
                        out.append(f"internal face {k} vs {name} on {x}")
                        if len(out) >= limit:
                            return out
    return out


def category_failures(C: Any, r: int, limit: int = 5) -> list[str]:
    """Unit laws, associativity and compatibility of composition with internal faces at degree ``r``."""
    out: list[str] = []
    objs = list(C.objects)
    homs = {(x, y): C.hom(x, y, r) for x in objs for y in objs}
    for (x, y), fs in homs.items():
        for f in fs:
            if C.compose(C.identity(y, r), f) != f or C.compose(f, C.identity(x, r)) != f:
                out.append(f"unit law fails for {f}")
            for z in objs:
                for g in homs[(y, z)]:
                    gf = C.compose(g, f)
                    for i in range(r + 1 if r else 0):
                        if C.hom_face(gf, i) != C.compose(C.hom_face(g, i), C.hom_face(f, i)):
                            out.append(f"face {i} does not commute with {g} o {f}")
                    for w in objs:
                        for h in homs[(z, w)]:
                            if C.compose(h, gf) != C.compose(C.compose(h, g), f):
                                out.append(f"associativity fails at {h}, {g}, {f}")
                    if len(out) >= limit:
                        return out
    return out


def comparison(bar: BarConstruction, x: BarSimplex) -> BarSimplex:
    """The map to the projected version: apply the projection to the tail."""
    return BarSimplex(x.objects, x.a, x.morphisms, bar.C.project(x.tail))


# -- test categories ---------------------------------------------------------------------


class DiscreteEnriched:
    """A finite category viewed as enriched in constant simplicial sets."""

    def __init__(self, category):
        self.category = category
        self.objects = list(category.objects)

    def hom(self, x, y, r):
        return self.category.hom(x, y)

    def compose(self, g, f):
        return self.category.compose(g, f)

    def identity(self, x, r):
        return self.category.identities[x]

    def hom_face(self, g, i):
        return g

    def hom_degeneracy(self, g, i):
        return g

    def project(self, g):
        return g

    def base_hom(self, x, y):
        return self.category.hom(x, y)

    def base_compose(self, g, f):
        return self.category.compose(g, f)


class TableFunctor:
    """A set-valued functor given by finite tables, constant in the internal direction."""

    def __init__(self, values: dict, maps: dict):
        self._values = {k: list(v) for k, v in values.items()}
        self._maps = maps  # morphism -> {element: image}

    def values(self, y, r):
        return self._values[y]

    @property
    def objects(self) -> list:
        return list(self._values)

    def act(self, g, a):
        table = self._maps.get(g)
        return a if table is None else table[a]

    def face(self, a, i):
        return a

    def degeneracy(self, a, i):
        return a

    @classmethod
    def from_json(cls, data: dict, objects: Sequence[Hashable] = ()) -> "TableFunctor":
        """Elements are read as strings; object keys are matched to ``objects`` by name."""
        by_name = {str(o): o for o in objects}
        values = {by_name.get(str(k), k): [str(a) for a in v] for k, v in data["values"].items()}
        maps = {m: {str(a): str(b) for a, b in table.items()} for m, table in data.get("maps", {}).items()}
        return cls(values, maps)


def functor_failures(category, functor: TableFunctor) -> list[str]:
    """Identities act trivially and composition is respected, on every element."""
    C = category.category
    out = []
    for x in C.objects:
        for a in functor.values(x, 0):
            if functor.act(C.identities[x], a) != a:
                out.append(f"identity of {x} moves {a}")
    for (g, f), h in C.table.items():
        for a in functor.values(C.morphisms[f][0], 0):
            if functor.act(g, functor.act(f, a)) != functor.act(h, a):
                out.append(f"{g} after {f} acts unlike {h} on {a}")
    return out


def _monotone(r: int, top: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations_with_replacement(range(top + 1), r + 1))


class IntervalCategory:
    """Objects 0 and 1; ``hom(0, 1)`` is the simplicial interval, the other homs are identities.

    An ``r``-simplex of ``hom(0, 1)`` is a monotone sequence in ``{0, 1}`` of
    length ``r + 1``.  The quotient category is the poset ``0 < 1``.
    """

    objects = [0, 1]

    def hom(self, x, y, r):
        if x == y:
            return [("id", x, r)]
        if (x, y) == (0, 1):
            return [("e", seq) for seq in _monotone(r, 1)]
        return []

    def identity(self, x, r):
        return ("id", x, r)

    def compose(self, g, f):
        if g[0] == "id":
            return f
        if f[0] == "id":
            return g
        raise ValueError("no composable pair of non-identities")

    def hom_face(self, g, i):
        if g[0] == "id":
            return ("id", g[1], g[2] - 1)
        return ("e", g[1][:i] + g[1][i + 1:])

    def hom_degeneracy(self, g, i):
        if g[0] == "id":
            return ("id", g[1], g[2] + 1)
        return ("e", g[1][:i + 1] + g[1][i:])

    def project(self, g):
        return ("id", g[1]) if g[0] == "id" else "0<1"

    def base_hom(self, x, y):
        if x == y:
            return [("id", x)]
        return ["0<1"] if (x, y) == (0, 1) else []

    def base_compose(self, g, f):
        if isinstance(g, tuple):
            return f
        return g


class IntervalFunctor:
    """``F(0)`` is three points and ``F(1) = hom(0, 1) x F(0)``."""

    points = ("a", "b", "c")

    def values(self, y, r):
        if y == 0:
            return list(self.points)
        return [(seq, p) for seq in _monotone(r, 1) for p in self.points]

    def act(self, g, a):
        return a if g[0] == "id" else (g[1], a)

    def face(self, a, i):
        if isinstance(a, str):
            return a
        seq, p = a
        return (seq[:i] + seq[i + 1:], p)

    def degeneracy(self, a, i):
        if isinstance(a, str):
            return a
        seq, p = a
        return (seq[:i + 1] + seq[i:], p)


def interval_count(y: int, q: int, r: int) -> int:
    """Closed form for the projected bar object of ``IntervalFunctor``.

    Chains are non-decreasing in ``{0, 1}``: all zeros, or a switch at one of
    ``q`` places, or all ones.  A chain touching 1 carries ``r + 2`` choices in
    either the switching morphism or in ``F(1)``.
    """
    if y == 0:
        return 3
    return 3 + (q + 1) * 3 * (r + 2)


@dataclass(frozen=True)
class DTildeSimplex:
    """An ``r``-simplex of the chaotic simplex over a D-morphism: a sequence of its vertices."""

    base: Any
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.base}@{''.join(map(str, self.vertices))}"


class DTildeTruncation:
    """The full subcategory of D~ on ``E_p, F_p`` for ``p <= max_p``.

    The simplex over a D-morphism ``g`` is modeled by the chaotic simplicial
    set on its ``d(g) + 1`` vertices, so an ``r``-simplex is any sequence of
    ``r + 1`` vertices and composition works vertex by vertex.
    """

    def __init__(self, max_p: int = 1):
        from . import dcategory as D

        self.D = D
        self.max_p = max_p
        self.objects = [(k, p) for k in "EF" for p in range(max_p + 1)]
        self._memo: dict = {}
        self._base: dict = {}
        for x in self.objects:
            for y in self.objects:
                self._base[(x, y)] = self._base_hom(x, y)

    def _base_hom(self, x, y) -> list:
        from ..simplicial.operators import all_canonical

        D = self.D
        if x[0] == "F" and y[0] == "E":
            return []
        return [D.DMorphism(x, y, op) for op in all_canonical(x[1], y[1])]

    def base_hom(self, x, y):
        return self._base[(x, y)]

    def base_compose(self, g, f):
        return self.D.compose_d(g, f)

    def project(self, g):
        return g.base

    def hom(self, x, y, r):
        out = []
        for g in self._base[(x, y)]:
            d = self.D.degeneracy_degree(g)
            out += [DTildeSimplex(g, v) for v in itertools.product(range(d + 1), repeat=r + 1)]
        return out

    def identity(self, x, r):
        return DTildeSimplex(self.D.identity(x), (0,) * (r + 1))

    def _word(self, g, k):
        return self.D.vertex_word(g, k) if g.has_f else list(g.op.word)

    def compose(self, g: DTildeSimplex, f: DTildeSimplex) -> DTildeSimplex:
        key = (g, f)
        if key not in self._memo:
            self._memo[key] = self._compose(g, f)
        return self._memo[key]

    def _compose(self, g: DTildeSimplex, f: DTildeSimplex) -> DTildeSimplex:
        D = self.D
        base = D.compose_d(g.base, f.base)
        if not base.has_f:
            return DTildeSimplex(base, (0,) * len(g.vertices))
        p = f.base.source[1]
        ks = []
        for v, w in zip(g.vertices, f.vertices):
            h, k = D.canonical_vertex(self._word(g.base, v) + self._word(f.base, w), p)
            if h != base:
                raise AssertionError("vertex composite left the simplex over the composite")
            ks.append(k)
        return DTildeSimplex(base, tuple(ks))

    def hom_face(self, g, i):
        return DTildeSimplex(g.base, g.vertices[:i] + g.vertices[i + 1:])

    def hom_degeneracy(self, g, i):
        return DTildeSimplex(g.base, g.vertices[:i + 1] + g.vertices[i:])


class CircleFunctor:
    """``E_p, F_p -> `` the ``p``-simplices of the circle; operators act, ``f`` acts trivially.

    It factors through the projection to D, so it is constant in the internal direction.
    """

    def __init__(self):
        from ..simplicial.sset import circle_model

        self.X = circle_model()
        self._memo: dict = {}

    def values(self, y, r):
        return list(self.X.simplices(y[1]))

    def act(self, g, a):
        base = g.base if isinstance(g, DTildeSimplex) else g
        key = (base.op, a)
        if key not in self._memo:
            self._memo[key] = self.X.apply_operator(base.op, a)
        return self._memo[key]

    def face(self, a, i):
        return a

    def degeneracy(self, a, i):
        return a


@dataclass
class BarCase:
    name: str
    category: Any
    functor: Any
    objects: list


def bar_cases() -> list[BarCase]:
    """The built-in categories used by the homotopy suite."""
    from ..simplicial.nerve import FiniteCategory, linear_order

    trivial = DiscreteEnriched(FiniteCategory(["x"], {}, {}, name="point"))
    chain = DiscreteEnriched(linear_order(2))
    # F(i) = {0..i}; i -> j includes
    chain_maps = {m: {a: a for a in range(3)} for m in chain.category.morphisms}
    return [
        BarCase("identity-only", trivial, TableFunctor({"x": ["*"]}, {}), ["x"]),
        BarCase("interval", IntervalCategory(), IntervalFunctor(), [0, 1]),
        BarCase("poset-2", chain, TableFunctor({i: list(range(i + 1)) for i in chain.objects}, chain_maps),
                 list(chain.objects)),
        BarCase("dtilde-1", DTildeTruncation(1), CircleFunctor(), [("E", 0), ("F", 1)]),
    ]


__all__ = [
    "BarConstruction", "BarSimplex", "SizeGuardError", "simplicial_identity_failures",
    "internal_compatibility_failures", "category_failures", "comparison", "DiscreteEnriched", "TableFunctor",
    "functor_failures", "IntervalCategory", "IntervalFunctor", "interval_count", "DTildeSimplex",
    "DTildeTruncation", "CircleFunctor", "BarCase", "bar_cases",
]
