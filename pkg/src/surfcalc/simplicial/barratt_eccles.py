"""The Barratt-Eccles operad and its monad on finite pointed simplicial sets.

A ``q``-simplex of ``E Sigma_k`` is a tuple of ``q + 1`` permutations; face
``i`` deletes entry ``i`` and degeneracy ``i`` repeats it.  Permutations are
read as orderings: position ``p`` carries label ``sigma[p - 1]``.

An element of ``Gamma(X)`` in simplicial degree ``r`` is a class of
``(sigma_0..sigma_r; x_1..x_k)`` with the ``x_a`` nonbase ``r``-simplices of
``X``.  ``GammaElement`` stores the canonical representative with
``sigma_0`` the identity: points listed in the first ordering, together with
the remaining orderings.  Basepoint points are deleted on the spot, which is
the basepoint identification of the reduced monad.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Protocol, Sequence

from .. import perms
from ..operad import BASEPOINT, MTerm
from ..operad import is_basepoint as is_m_basepoint
from .sset import FiniteSimplicialSet, Simplex, TruncationError


# -- E Sigma_k ---------------------------------------------------------------


@dataclass(frozen=True)
class BESimplex:
    arity: int
    perms: tuple[perms.Perm, ...]

    def __post_init__(self) -> None:
        if not self.perms:
            raise ValueError("a simplex has at least one vertex")
        for p in self.perms:
            perms.check_perm(p, self.arity)

    @property
    def degree(self) -> int:
        return len(self.perms) - 1

    def face(self, i: int) -> "BESimplex":
        if self.degree < 1 or not 0 <= i <= self.degree:
            raise IndexError(f"face {i} of a {self.degree}-simplex")
        return BESimplex(self.arity, self.perms[:i] + self.perms[i + 1:])

    def degeneracy(self, i: int) -> "BESimplex":
        if not 0 <= i <= self.degree:
            raise IndexError(f"degeneracy {i} of a {self.degree}-simplex")
        return BESimplex(self.arity, self.perms[:i + 1] + self.perms[i:])

    def act(self, tau: perms.Perm) -> "BESimplex":
        """Right action of ``Sigma_k``: relabel every ordering by ``tau``."""
        return BESimplex(self.arity, tuple(tuple(tau[v - 1] for v in p) for p in self.perms))

    @property
    def is_degenerate(self) -> bool:
        return any(a == b for a, b in zip(self.perms, self.perms[1:]))


def operad_compose_be(outer: BESimplex, inner: Sequence[BESimplex]) -> BESimplex:
    """Degreewise composition in the symmetric-groups operad."""
    if len(inner) != outer.arity or any(b.degree != outer.degree for b in inner):
        raise ValueError("arity or degree mismatch")
    out = tuple(perms.operad_compose(outer.perms[j], [b.perms[j] for b in inner])
                for j in range(outer.degree + 1))
    return BESimplex(sum(b.arity for b in inner), out)


def e_sigma(k: int, max_degree: int) -> FiniteSimplicialSet:
    """``E Sigma_k`` truncated at ``max_degree``."""
    verts = list(perms.all_perms(k))
    dims: dict[Any, int] = {}
    faces: dict[Any, tuple] = {}
    for q in range(max_degree + 1):
        for seq in itertools.product(verts, repeat=q + 1):
            if any(a == b for a, b in zip(seq, seq[1:])):
                continue
            dims[seq] = q
            faces[seq] = tuple(_tuple_ez(seq[:i] + seq[i + 1:]) for i in range(q + 1)) if q else ()
    return FiniteSimplicialSet(dims, faces, None, max_degree, name=f"ESigma{k}")


def _tuple_ez(seq: tuple) -> Simplex:
    vals, surj = [], []
    for x in seq:
        if not vals or vals[-1] != x:
            vals.append(x)
        surj.append(len(vals) - 1)
    return Simplex(tuple(vals), tuple(surj))


def be_simplex_of(s: Simplex) -> BESimplex:
    verts = tuple(s.base[v] for v in s.surj)
    return BESimplex(len(verts[0]), verts)


def freeness_audit(k: int, max_degree: int) -> dict:
    """Orbit counting for the ``Sigma_k`` action on ``E Sigma_k``, degreewise."""
    X = e_sigma(k, max_degree)
    out = {}
    group = list(perms.all_perms(k))
    for q in range(max_degree + 1):
        simplices = [be_simplex_of(s) for s in X.simplices(q)]
        seen, orbits, fixed = set(), 0, 0
        for s in simplices:
            if s in seen:
                continue
            orbit = {s.act(t) for t in group}
            orbits += 1
            seen |= orbit
            fixed += len(group) - len(orbit)
        out[q] = {"simplices": len(simplices), "orbits": orbits,
                  "free": fixed == 0 and orbits * math.factorial(k) == len(simplices)}
    return out


# -- carriers ------------------------------------------------------------------


class Carrier(Protocol):
    def face(self, x: Any, i: int) -> Any: ...

    def degeneracy(self, x: Any, i: int) -> Any: ...

    def is_basepoint(self, x: Any) -> bool: ...


@dataclass(frozen=True)
class SSetCarrier:
    """Simplices of a finite pointed simplicial set."""

    X: FiniteSimplicialSet

    def face(self, x: Simplex, i: int) -> Simplex:
        return self.X.face(x, i)

    def degeneracy(self, x: Simplex, i: int) -> Simplex:
        return self.X.degeneracy(x, i)

    def is_basepoint(self, x: Any) -> bool:
        return x is BASEPOINT or (isinstance(x, Simplex) and self.X.is_basepoint(x))


class DiscreteCarrier:
    """A set viewed as a constant simplicial set; ``BASEPOINT`` is the basepoint."""

    def __init__(self, basepoint_test: Callable[[Any], bool] | None = None) -> None:
        self._test = basepoint_test

    def face(self, x: Any, i: int) -> Any:
        return x

    def degeneracy(self, x: Any, i: int) -> Any:
        return x

    def is_basepoint(self, x: Any) -> bool:
        return x is BASEPOINT or (self._test is not None and self._test(x))


@dataclass(frozen=True)
class SmashCarrier:
    """Pairs ``(a, b)``; anything touching a basepoint collapses to ``BASEPOINT``."""

    left: Any
    right: Any

    def make(self, a: Any, b: Any) -> Any:
        if self.left.is_basepoint(a) or self.right.is_basepoint(b):
            return BASEPOINT
        return (a, b)

    def face(self, x: Any, i: int) -> Any:
        if x is BASEPOINT:
            return x
        return self.make(self.left.face(x[0], i), self.right.face(x[1], i))

    def degeneracy(self, x: Any, i: int) -> Any:
        if x is BASEPOINT:
            return x
        return self.make(self.left.degeneracy(x[0], i), self.right.degeneracy(x[1], i))

    def is_basepoint(self, x: Any) -> bool:
        return x is BASEPOINT


@dataclass(frozen=True)
class MTermCarrier:
    """``M(Y)`` over a carrier ``Y``, acting leafwise; basepoint is the disc."""

    inner: Any

    def face(self, x: Any, i: int) -> Any:
        return _m_leafwise(x, lambda y: self.inner.face(y, i))

    def degeneracy(self, x: Any, i: int) -> Any:
        return _m_leafwise(x, lambda y: self.inner.degeneracy(y, i))

    def is_basepoint(self, x: Any) -> bool:
        return is_m_basepoint(x)


def _m_leafwise(x: Any, f: Callable[[Any], Any]) -> Any:
    if x is BASEPOINT:
        return x
    return MTerm.make(x.top, [f(y) for y in x.leaves])


# -- Gamma elements -------------------------------------------------------------


@dataclass(frozen=True)
class GammaElement:
    points: tuple
    orders: tuple[perms.Perm, ...]

    @property
    def arity(self) -> int:
        return len(self.points)

    @property
    def degree(self) -> int:
        return len(self.orders) - 1

    @property
    def is_basepoint(self) -> bool:
        return not self.points

    def be_simplex(self) -> BESimplex:
        return BESimplex(self.arity, self.orders)

    def __str__(self) -> str:
        ords = " ".join("".join(map(str, o)) or "-" for o in self.orders)
        return f"<{ords} | {', '.join(map(str, self.points))}>"


def gamma_element(points: Sequence[Any], orders: Sequence[Sequence[int]], carrier: Any) -> GammaElement:
    """Canonical representative of ``(orders; points)``, deleting basepoint points."""
    points = list(points)
    orders = [tuple(o) for o in orders]
    for o in orders:
        perms.check_perm(o, len(points))
    for a in reversed(range(1, len(points) + 1)):
        if carrier.is_basepoint(points[a - 1]):
            orders = [perms.delete_letter(o, a) for o in orders]
            del points[a - 1]
    first = orders[0]
    new_label = {old: pos for pos, old in enumerate(first, start=1)}
    pts = tuple(points[old - 1] for old in first)
    ords = tuple(tuple(new_label[v] for v in o) for o in orders)
    return GammaElement(pts, ords)


def basepoint_gamma(degree: int) -> GammaElement:
    return GammaElement((), ((),) * (degree + 1))


@dataclass(frozen=True)
class GammaCarrier:
    """``Gamma(Y)`` over a carrier ``Y``, with an optional arity bound."""

    inner: Any
    max_arity: int | None = None

    def check(self, x: GammaElement) -> GammaElement:
        if self.max_arity is not None and x.arity > self.max_arity:
            raise TruncationError(f"arity {x.arity} exceeds the bound {self.max_arity}")
        return x

    def make(self, points: Sequence[Any], orders: Sequence[Sequence[int]]) -> GammaElement:
        return self.check(gamma_element(points, orders, self.inner))

    def face(self, x: GammaElement, i: int) -> GammaElement:
        if x.degree < 1 or not 0 <= i <= x.degree:
            raise IndexError(f"face {i} in degree {x.degree}")
        return self.make([self.inner.face(p, i) for p in x.points], x.orders[:i] + x.orders[i + 1:])

    def degeneracy(self, x: GammaElement, i: int) -> GammaElement:
        if not 0 <= i <= x.degree:
            raise IndexError(f"degeneracy {i} in degree {x.degree}")
        return self.make([self.inner.degeneracy(p, i) for p in x.points], x.orders[:i + 1] + x.orders[i:])

    def is_basepoint(self, x: Any) -> bool:
        return x is BASEPOINT or (isinstance(x, GammaElement) and x.is_basepoint)

    def eta(self, y: Any, degree: int) -> GammaElement:
        return eta_gamma(y, degree, self.inner)

    def mu(self, x: GammaElement) -> GammaElement:
        return self.check(mu_gamma(x))

    def map(self, f: Callable[[Any], Any], x: GammaElement, target_inner: Any = None) -> GammaElement:
        return self.check(gamma_map(f, x, target_inner or self.inner))


def eta_gamma(y: Any, degree: int, carrier: Any) -> GammaElement:
    if carrier.is_basepoint(y):
        return basepoint_gamma(degree)
    return GammaElement((y,), ((1,),) * (degree + 1))


def mu_gamma(x: GammaElement) -> GammaElement:
    """Flatten: orderings compare (outer position, inner position) lexicographically."""
    r = x.degree
    points, keys = [], []
    for a, inner in enumerate(x.points, start=1):
        if inner.degree != r:
            raise ValueError("inner element of the wrong degree")
        for b, p in enumerate(inner.points, start=1):
            points.append(p)
            keys.append((a, b))
    orders = []
    for j in range(r + 1):
        outer_pos = {lab: pos for pos, lab in enumerate(x.orders[j])}
        inner_pos = [{lab: pos for pos, lab in enumerate(g.orders[j])} for g in x.points]
        rank = sorted(range(len(points)),
                      key=lambda n: (outer_pos[keys[n][0]], inner_pos[keys[n][0] - 1][keys[n][1]]))
        orders.append(tuple(n + 1 for n in rank))
    # inner points are never basepoints, so only the relabeling is needed
    first = orders[0]
    new_label = {old: pos for pos, old in enumerate(first, start=1)}
    return GammaElement(tuple(points[old - 1] for old in first),
                        tuple(tuple(new_label[v] for v in o) for o in orders))


def mu_gamma_blocks(x: GammaElement) -> GammaElement:
    """Independent flatten via symmetric-groups operad composition."""
    r = x.degree
    points = [p for g in x.points for p in g.points]
    orders = [perms.operad_compose(x.orders[j], [g.orders[j] for g in x.points]) for j in range(r + 1)]
    first = orders[0]
    new_label = {old: pos for pos, old in enumerate(first, start=1)}
    return GammaElement(tuple(points[old - 1] for old in first),
                        tuple(tuple(new_label[v] for v in o) for o in orders))


def gamma_map(f: Callable[[Any], Any], x: GammaElement, target: Any) -> GammaElement:
    """``Gamma(f)``: apply ``f`` pointwise; ``target`` decides basepoints."""
    return gamma_element([f(p) for p in x.points], x.orders, target)


def assembly(y: Any, x: GammaElement, left: Any, right: Any) -> GammaElement:
    """``a(y, sigma, x_1..x_n) = (sigma, [y, x_1], ..., [y, x_n])``."""
    sm = SmashCarrier(left, right)
    return gamma_element([sm.make(y, p) for p in x.points], x.orders, sm)


# -- enumeration -------------------------------------------------------------------


def gamma_elements(points_of_degree: Callable[[int], Sequence[Any]], degree: int,
                   max_arity: int) -> Iterator[GammaElement]:
    """All canonical elements of arity <= ``max_arity`` over the given nonbase points."""
    pts = list(points_of_degree(degree))
    for k in range(max_arity + 1):
        for chosen in itertools.product(pts, repeat=k):
            for rest in itertools.product(list(perms.all_perms(k)), repeat=degree):
                yield GammaElement(tuple(chosen), (perms.identity(k),) + tuple(rest))


def ez_decompose(carrier: Any, x: Any, degree: int) -> tuple[Any, tuple[int, ...]]:
    """Eilenberg-Zilber: ``x = X(surj)(base)`` with ``base`` nondegenerate."""
    surj = tuple(range(degree + 1))
    while degree > 0:
        for j in range(degree):
            y = carrier.face(x, j)
            if carrier.degeneracy(y, j) == x:
                # x = s_j y, so the surjection gets post-composed with s^j
                surj = _push(surj, j)
                x, degree = y, degree - 1
                break
        else:
            break
    return x, surj


def _push(surj: tuple[int, ...], j: int) -> tuple[int, ...]:
    return tuple(v if v <= j else v - 1 for v in surj)


def carrier_to_sset(carrier: Any, elements: Callable[[int], Iterable[Any]], max_degree: int,
                    basepoint: Any = None, name: str = "") -> FiniteSimplicialSet:
    """Tabulate a carrier's nondegenerate simplices up to ``max_degree``."""
    dims: dict[Any, int] = {}
    faces: dict[Any, tuple] = {}
    for q in range(max_degree + 1):
        for x in elements(q):
            if q and ez_decompose(carrier, x, q)[1] != tuple(range(q + 1)):
                continue
            dims[x] = q
            fs = []
            for i in range(q + 1) if q else ():
                base, surj = ez_decompose(carrier, carrier.face(x, i), q - 1)
                fs.append(Simplex(base, surj))
            faces[x] = tuple(fs)
    return FiniteSimplicialSet(dims, faces, basepoint, max_degree, name=name)


def gamma_monad(X: FiniteSimplicialSet, max_arity: int, max_degree: int) -> tuple[FiniteSimplicialSet, GammaCarrier]:
    """``Gamma(X)`` truncated in arity and degree, plus its carrier."""
    if not X.pointed:
        raise ValueError("Gamma acts on pointed simplicial sets")
    inner = SSetCarrier(X)
    carrier = GammaCarrier(inner, max_arity)
    nonbase = lambda q: [s for s in X.simplices(q) if not X.is_basepoint(s)]
    Y = carrier_to_sset(carrier, lambda q: gamma_elements(nonbase, q, max_arity), max_degree,
                        basepoint_gamma(0), name=f"Gamma({X.name})")
    return Y, carrier


# -- audits ------------------------------------------------------------------------


@dataclass
class LawReport:
    checked: dict = None  # law -> number of instances
    failures: list = None

    def __post_init__(self) -> None:
        self.checked = self.checked or {}
        self.failures = self.failures or []

    def record(self, law: str, ok: bool, witness: Any) -> None:
        self.checked[law] = self.checked.get(law, 0) + 1
        if not ok and len(self.failures) < 20:
            self.failures.append({"law": law, "witness": str(witness)})

    @property
    def ok(self) -> bool:
        return not self.failures


def _nonbase_gamma(points_of_degree: Callable[[int], Sequence[Any]], max_arity: int) -> Callable[[int], list]:
    return lambda q: [g for g in gamma_elements(points_of_degree, q, max_arity) if g.points]


def monad_law_audit(X: FiniteSimplicialSet, max_arity: int = 2, max_degree: int = 1,
                    report: LawReport | None = None, assoc_sample: int | None = None,
                    seed: int = 0) -> LawReport:
    """Unit laws, associativity, the flatten oracle and simpliciality of eta and mu.

    Every element of ``Gamma(X)``, ``Gamma^2(X)`` and ``Gamma^3(X)`` with
    arity at most ``max_arity`` at each level and degree at most
    ``max_degree`` is visited, except that with ``assoc_sample`` set the
    associativity check draws that many random elements of ``Gamma^3(X)`` per
    degree instead.
    """
    import random

    rng = random.Random(seed)
    rep = report or LawReport()
    inner = SSetCarrier(X)
    g1, g2 = GammaCarrier(inner), GammaCarrier(GammaCarrier(inner))
    base = lambda q: [s for s in X.simplices(q) if not X.is_basepoint(s)]
    level1 = _nonbase_gamma(base, max_arity)
    level2 = _nonbase_gamma(level1, max_arity)
    for r in range(max_degree + 1):
        for y in X.simplices(r):
            e = eta_gamma(y, r, inner)
            for i in range(r + 1) if r else ():
                rep.record("eta simplicial", g1.face(e, i) == eta_gamma(X.face(y, i), r - 1, inner), y)
        for x in gamma_elements(base, r, max_arity):
            rep.record("mu eta = id", mu_gamma(eta_gamma(x, r, g1)) == x, x)
            rep.record("mu Gamma(eta) = id", mu_gamma(gamma_map(lambda p: eta_gamma(p, r, inner), x, g1)) == x, x)
        for w in gamma_elements(level1, r, max_arity):
            m = mu_gamma(w)
            rep.record("flatten oracle", m == mu_gamma_blocks(w), w)
            for i in range(r + 1) if r else ():
                rep.record("mu simplicial", g1.face(m, i) == mu_gamma(g2.face(w, i)), w)
            for i in range(r + 1):
                rep.record("mu simplicial", g1.degeneracy(m, i) == mu_gamma(g2.degeneracy(w, i)), w)
        if assoc_sample is None:
            triples: Iterable = gamma_elements(level2, r, max_arity)
        else:
            pool = level2(r)
            triples = (random_gamma(rng, pool, r, max_arity) for _ in range(assoc_sample)) if pool else ()
        for z in triples:
            lhs = mu_gamma(gamma_map(mu_gamma, z, g1))
            rep.record("associativity", lhs == mu_gamma(mu_gamma(z)), z)
    return rep


def random_gamma(rng, points: Sequence[Any], degree: int, max_arity: int) -> GammaElement:
    k = rng.randint(0, max_arity)
    chosen = [rng.choice(points) for _ in range(k)]
    return GammaElement(tuple(chosen), (perms.identity(k),) + tuple(perms.random_perm(k, rng) for _ in range(degree)))


def assembly_audit(count: int = 100, seed: int = 0, max_arity: int = 3, max_degree: int = 2,
                   report: LawReport | None = None) -> LawReport:
    """Formula, naturality, simpliciality and compatibility with ``mu`` of the assembly map.

    ``a : A ^ Gamma(B) -> Gamma(A ^ B)`` with ``A`` the circle and ``B`` the
    circle or the 0-sphere; naturality runs over all pointed self-maps.
    """
    import random

    from .sset import circle_model, enumerate_maps, sphere0

    rng = random.Random(seed)
    rep = report or LawReport()
    A = circle_model()
    left = SSetCarrier(A)
    maps_a = enumerate_maps(A, A)
    for B in (A, sphere0()):
        right = SSetCarrier(B)
        sm = SmashCarrier(left, right)
        gB = GammaCarrier(right)
        maps_b = enumerate_maps(B, B)
        for n in range(count):
            r = rng.randint(0, max_degree)
            y = rng.choice(A.simplices(r))
            nonbase = [s for s in B.simplices(r) if not B.is_basepoint(s)]
            x = random_gamma(rng, nonbase, r, max_arity)
            out = assembly(y, x, left, right)
            if left.is_basepoint(y) or not x.points:
                ok = out == basepoint_gamma(r)
            else:
                ok = out.points == tuple((y, p) for p in x.points) and out.orders == x.orders
            rep.record("assembly formula", ok, (y, x))
            f, g = rng.choice(maps_a), rng.choice(maps_b)
            fg = lambda pair: BASEPOINT if pair is BASEPOINT else sm.make(f(pair[0]), g(pair[1]))
            lhs = assembly(f(y), gamma_map(g, x, right), left, right)
            rep.record("assembly naturality", lhs == gamma_map(fg, out, sm), (y, x))
            for i in range(r + 1) if r else ():
                rep.record("assembly simplicial",
                           GammaCarrier(sm).face(out, i) == assembly(A.face(y, i), gB.face(x, i), left, right), (y, x))
            # a(y, mu w) = mu(Gamma(a(y, -)) a(y, w)) on w in Gamma^2(B)
            inner_pts = [g_ for g_ in (random_gamma(rng, nonbase, r, 2) for _ in range(6)) if g_.points]
            if nonbase and inner_pts:
                w = random_gamma(rng, inner_pts, r, 2)
                outer = assembly(y, w, left, gB)
                lam = lambda pair: assembly(pair[0], pair[1], left, right)
                rhs = mu_gamma(gamma_map(lam, outer, GammaCarrier(sm)))
                rep.record("assembly and mu", assembly(y, mu_gamma(w), left, right) == rhs, (y, w))
    return rep
