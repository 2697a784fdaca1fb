"""The map from the circle smashed with pairs of closed surfaces into the nerve of S.

``phi_tilde`` sends the two edges of the circle model to the morphisms ``F``
and ``G : 0 -> 1`` and extends to degenerate simplices through the simplicial
operator algebra.  The second simplicial direction (the morphism spaces of S)
is modeled by tuples of surfaces, one per vertex, acted on entrywise.

The second half of the module builds the stand-in for

    f_p : Gamma(S^1 ^ M^p(X)) -> Gamma(Gamma^p(BS)),   X = (M(*) x M(*))_+

in one fixed internal simplicial degree ``r``, together with the face maps
``delta_j`` (``j < p``) and degeneracies ``s_j`` of both sides, so that the
almost-simplicial identities can be checked elementwise.  Mapping classes are
not modeled, so ``M``-terms are constant in the internal direction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .. import perms
from ..cobordism import NerveSimplex, base_chain, from_operad_element
from ..operad import BASEPOINT, MTerm, OperadElement, eta_m, gamma_bar, mu_m
from ..operad import is_basepoint as is_m_basepoint
from .barratt_eccles import (GammaCarrier, GammaElement, MTermCarrier, SmashCarrier, SSetCarrier,
                             basepoint_gamma, eta_gamma, gamma_element, gamma_map, mu_gamma)
from .sset import FiniteSimplicialSet, Simplex, circle_model

CIRCLE = circle_model()


def _check_closed(F: OperadElement) -> None:
    if F.arity != 0:
        raise ValueError(f"{F} is not an element of M(*)")


def phi_generator(name: str, F: OperadElement, G: OperadElement) -> NerveSimplex:
    """The three defining clauses on nondegenerate simplices of the circle model."""
    _check_closed(F)
    _check_closed(G)
    if name == "x0":
        return NerveSimplex((0,), ())
    if name == "x1":
        return NerveSimplex((1,), ())
    if name == "y1":
        return NerveSimplex.chain([from_operad_element(F)])
    if name == "y2":
        return NerveSimplex.chain([from_operad_element(G)])
    raise KeyError(f"{name!r} is not a simplex of the circle model")


def phi_tilde(y: Simplex, F: OperadElement, G: OperadElement) -> NerveSimplex:
    return phi_generator(y.base, F, G).act(y.surj)


@dataclass(frozen=True)
class BiSimplex:
    """``(p, q)``-bisimplex of BS: one ``p``-chain per vertex of the ``q`` direction."""

    chains: tuple[NerveSimplex, ...]

    @property
    def degrees(self) -> tuple[int, int]:
        return self.chains[0].degree, len(self.chains) - 1

    def face_p(self, i: int) -> "BiSimplex":
        return BiSimplex(tuple(c.face(i) for c in self.chains))

    def degeneracy_p(self, i: int) -> "BiSimplex":
        return BiSimplex(tuple(c.degeneracy(i) for c in self.chains))

    def face_q(self, i: int) -> "BiSimplex":
        return BiSimplex(self.chains[:i] + self.chains[i + 1:])

    def degeneracy_q(self, i: int) -> "BiSimplex":
        return BiSimplex(self.chains[:i + 1] + self.chains[i:])


def phi_tilde_bi(y: Simplex, pairs: Sequence[tuple[OperadElement, OperadElement]]) -> BiSimplex:
    """``phi~_{p,q}`` on a ``p``-simplex of the circle and a ``q``-simplex of pairs."""
    return BiSimplex(tuple(phi_tilde(y, F, G) for F, G in pairs))


def bisimpliciality_audit(pairs: Sequence[tuple[OperadElement, OperadElement]],
                          max_p: int = 3) -> list[str]:
    """Check that ``phi~`` commutes with every face and degeneracy in both directions."""
    out = []
    q = len(pairs) - 1
    for p in range(max_p + 1):
        for y in CIRCLE.simplices(p):
            img = phi_tilde_bi(y, pairs)
            for i in range(p + 1) if p else ():
                if phi_tilde_bi(CIRCLE.face(y, i), pairs) != img.face_p(i):
                    out.append(f"d{i} (circle direction) on {y}")
            for i in range(p + 1):
                if phi_tilde_bi(CIRCLE.degeneracy(y, i), pairs) != img.degeneracy_p(i):
                    out.append(f"s{i} (circle direction) on {y}")
            for i in range(q + 1) if q else ():
                if phi_tilde_bi(y, pairs[:i] + pairs[i + 1:]) != img.face_q(i):
                    out.append(f"d{i} (surface direction) on {y}")
            for i in range(q + 1):
                if phi_tilde_bi(y, list(pairs[:i + 1]) + list(pairs[i:])) != img.degeneracy_q(i):
                    out.append(f"s{i} (surface direction) on {y}")
    return out


# -- carriers for both sides ---------------------------------------------------------


class NerveCarrier:
    """Simplices of the nerve of S; the basepoint is the object 0."""

    def face(self, x: NerveSimplex, i: int) -> NerveSimplex:
        return x.face(i)

    def degeneracy(self, x: NerveSimplex, i: int) -> NerveSimplex:
        return x.degeneracy(i)

    def is_basepoint(self, x: Any) -> bool:
        return x is BASEPOINT or (isinstance(x, NerveSimplex) and x.is_basepoint)


class PairCarrier:
    """``X = (M(*) x M(*))_+``, constant in the internal direction."""

    def face(self, x: Any, i: int) -> Any:
        return x

    def degeneracy(self, x: Any, i: int) -> Any:
        return x

    def is_basepoint(self, x: Any) -> bool:
        return x is BASEPOINT


def m_power_carrier(p: int) -> Any:
    c: Any = PairCarrier()
    for _ in range(p):
        c = MTermCarrier(c)
    return c


def gamma_power_carrier(p: int) -> Any:
    c: Any = NerveCarrier()
    for _ in range(p):
        c = GammaCarrier(c)
    return c


def e_carrier(p: int) -> GammaCarrier:
    """Carrier of ``E_p = Gamma(S^1 ^ M^p(X))``."""
    return GammaCarrier(SmashCarrier(SSetCarrier(CIRCLE), m_power_carrier(p)))


def f_carrier(p: int) -> GammaCarrier:
    """Carrier of ``F_p = Gamma(Gamma^p(BS))``."""
    return GammaCarrier(gamma_power_carrier(p))


# -- the pieces of f_p -------------------------------------------------------------------


def pi_m(m: MTerm, degree: int, inner: Any) -> GammaElement:
    """The operad projection on one ``M``-term: leaves in planar order, constant in degree."""
    return gamma_element(list(m.leaves), [perms.identity(m.arity)] * (degree + 1), inner)


def pi_power(m: Any, p: int, degree: int) -> Any:
    """``pi^p : M^p(Y) -> Gamma^p(Y)``."""
    if p == 0:
        return m
    if is_m_basepoint(m):
        return basepoint_gamma(degree)
    leaves = [pi_power(x, p - 1, degree) for x in m.leaves]
    return gamma_element(leaves, [perms.identity(len(leaves))] * (degree + 1), _AnyBase)


class _AnyBase:
    """Basepoint test shared by every nesting of ``M``, ``Gamma`` and smash."""

    @staticmethod
    def is_basepoint(x: Any) -> bool:
        return x is BASEPOINT or (isinstance(x, GammaElement) and x.is_basepoint) or is_m_basepoint(x)


def smash_pair(y: Simplex, z: Any) -> Any:
    if CIRCLE.is_basepoint(y) or _AnyBase.is_basepoint(z):
        return BASEPOINT
    return (y, z)


def assembly_power(y: Simplex, z: Any, p: int) -> Any:
    """Iterated assembly ``S^1 ^ Gamma^p(Y) -> Gamma^p(S^1 ^ Y)``."""
    if p == 0:
        return smash_pair(y, z)
    if _AnyBase.is_basepoint(z):
        return basepoint_gamma(y.degree)
    return gamma_element([assembly_power(y, w, p - 1) for w in z.points], z.orders, _AnyBase)


def phi(point: Any, degree: int) -> NerveSimplex:
    """``S^1 ^ X -> BS`` in one degree."""
    if point is BASEPOINT:
        return base_chain(degree)
    y, (F, G) = point
    return phi_tilde(y, F, G)


def gamma_power_map(f: Callable[[Any], Any], z: Any, p: int) -> Any:
    if p == 0:
        return f(z)
    return gamma_element([gamma_power_map(f, w, p - 1) for w in z.points], z.orders, _NerveOrGamma)


class _NerveOrGamma:
    @staticmethod
    def is_basepoint(x: Any) -> bool:
        return (isinstance(x, NerveSimplex) and x.is_basepoint) or (isinstance(x, GammaElement) and x.is_basepoint)


def f_map(w: GammaElement, p: int) -> GammaElement:
    """``f_p = Gamma(Gamma^p(phi) o a^(p) o (S^1 ^ pi^p))``, pointwise on ``w``."""
    r = w.degree

    def on_point(pt):
        y, m = pt
        z = pi_power(m, p, r)
        return gamma_power_map(lambda u: phi(u, r), assembly_power(y, z, p), p)

    return gamma_map(on_point, w, _NerveOrGamma)


# -- faces and degeneracies of E and F (external direction) -----------------------------


def _smash_map(f: Callable[[Any], Any]) -> Callable[[Any], Any]:
    return lambda pt: smash_pair(pt[0], f(pt[1]))


def _m_power_apply(f: Callable[[Any], Any], m: Any, depth: int) -> Any:
    """``M^depth(f)``."""
    if depth == 0:
        return f(m)
    return MTerm.make(m.top, [_m_power_apply(f, x, depth - 1) for x in m.leaves])


def _gamma_power_apply(f: Callable[[Any], Any], z: Any, depth: int) -> Any:
    """``Gamma^depth(f)``."""
    if depth == 0:
        return f(z)
    return gamma_element([_gamma_power_apply(f, x, depth - 1) for x in z.points], z.orders, _NerveOrGamma)


def lambda_m(w: GammaElement) -> GammaElement:
    """``Gamma(S^1 ^ M(Y)) -> Gamma(S^1 ^ Y)``: assemble, project, flatten."""
    r = w.degree

    def on_point(pt):
        y, m = pt
        assembled = [smash_pair(y, x) for x in m.leaves]
        return gamma_element(assembled, [perms.identity(len(assembled))] * (r + 1), _AnyBase)

    return mu_gamma(gamma_map(on_point, w, _AnyBase))


def e_face(w: GammaElement, j: int, p: int) -> GammaElement:
    if not 0 <= j < p:
        raise IndexError(f"only faces 0..{p - 1} of E_{p} are modeled")
    if j == 0:
        return lambda_m(w)
    return gamma_map(_smash_map(lambda m: _m_power_apply(mu_m, m, j - 1)), w, _AnyBase)


def e_degeneracy(w: GammaElement, j: int, p: int) -> GammaElement:
    if not 0 <= j <= p:
        raise IndexError(f"degeneracy {j} of E_{p}")
    return gamma_map(_smash_map(lambda m: _m_power_apply(eta_m, m, j)), w, _AnyBase)


def f_face(w: GammaElement, j: int, p: int) -> GammaElement:
    if not 0 <= j < p:
        raise IndexError(f"only faces 0..{p - 1} of F_{p} are modeled")
    if j == 0:
        return mu_gamma(w)
    return gamma_map(lambda z: _gamma_power_apply(mu_gamma, z, j - 1), w, _NerveOrGamma)


def f_degeneracy(w: GammaElement, j: int, p: int) -> GammaElement:
    if not 0 <= j <= p:
        raise IndexError(f"degeneracy {j} of F_{p}")
    r = w.degree
    eta = lambda z: eta_gamma(z, r, _NerveOrGamma)
    return gamma_map(lambda z: _gamma_power_apply(eta, z, j), w, _NerveOrGamma)


# -- random elements and the audit ---------------------------------------------------------


@dataclass
class AlmostSimplicialReport:
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return not self.failures


def random_closed(rng: random.Random, max_genus: int = 2) -> OperadElement:
    g = rng.randint(0, max_genus)
    text = "D"
    for _ in range(g):
        text = f"T({text})"
    if rng.random() < 0.3:
        text = f"P({text},D)"
    return OperadElement.of(text)


def random_top(rng: random.Random, arity: int) -> OperadElement:
    from .. import gen
    return OperadElement.of(gen.random_term_with(rng, arity, rng.randint(0, 1), rng.randint(0, 1)))


def random_m_power(rng: random.Random, p: int, max_arity: int = 2) -> Any:
    if p == 0:
        if rng.random() < 0.15:
            return BASEPOINT
        return (random_closed(rng), random_closed(rng))
    k = rng.randint(0, max_arity)
    return MTerm.make(random_top(rng, k), [random_m_power(rng, p - 1, max_arity) for _ in range(k)])


def random_e_element(rng: random.Random, p: int, degree: int, max_arity: int = 2) -> GammaElement:
    circle = CIRCLE.simplices(degree)
    k = rng.randint(0, max_arity)
    points = [smash_pair(rng.choice(circle), random_m_power(rng, p, max_arity)) for _ in range(k)]
    orders = [perms.random_perm(k, rng) for _ in range(degree + 1)]
    return gamma_element(points, orders, _AnyBase)


def almost_simplicial_audit(max_p: int = 3, degrees: Sequence[int] = (0, 1, 2), count: int = 40,
                            seed: int = 0, max_arity: int = 2) -> AlmostSimplicialReport:
    """``d_j f_p = f_{p-1} d_j`` (``j < p``), ``s_j f_p = f_{p+1} s_j``, and internal faces."""
    rng = random.Random(seed)
    rep = AlmostSimplicialReport()
    for p in range(max_p + 1):
        ec, fc = e_carrier(p), f_carrier(p)
        for r in degrees:
            for n in range(count):
                w = random_e_element(rng, p, r, max_arity)
                fw = f_map(w, p)
                checks = []
                for j in range(p):
                    checks.append((f"d{j}", f_face(fw, j, p), f_map(e_face(w, j, p), p - 1)))
                for j in range(p + 1):
                    checks.append((f"s{j}", f_degeneracy(fw, j, p), f_map(e_degeneracy(w, j, p), p + 1)))
                for i in range(r + 1) if r else ():
                    checks.append((f"internal d{i}", fc.face(fw, i), f_map(ec.face(w, i), p)))
                for i in range(r + 1):
                    checks.append((f"internal s{i}", fc.degeneracy(fw, i), f_map(ec.degeneracy(w, i), p)))
                for name, lhs, rhs in checks:
                    rep.checked += 1
                    if lhs != rhs:
                        rep.failures.append({"p": p, "degree": r, "case": n, "identity": name, "element": str(w)})
    return rep
