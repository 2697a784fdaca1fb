"""The surface operad on objects: normal-form terms under gluing.

``gamma_bar(F, Gs)`` plugs ``Gs[i - 1]`` into the slot of ``F`` labeled
``i`` and renumbers the surviving slots block by block: all slots coming from
``G1`` first (in ``G1``'s own label order), then those of ``G2``, and so on.
The glued term is then normalized, so equality of elements is syntactic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import perms, terms
from .rewrite import is_normal, normal_form
from .terms import Circle, Term


@dataclass(frozen=True)
class OperadElement:
    term: Term

    def __post_init__(self) -> None:
        terms.check_labels(self.term)
        if not is_normal(self.term):
            raise ValueError(f"{self.term} is not in normal form; use OperadElement.of")

    @classmethod
    def of(cls, t: Term | str) -> "OperadElement":
        """Normalize an arbitrary well-formed term into an element."""
        if isinstance(t, str):
            t = terms.parse(t)
        return cls(normal_form(terms.check_labels(t)))

    @property
    def signature(self) -> terms.SurfaceSignature:
        return terms.signature(self.term)

    @property
    def arity(self) -> int:
        return terms.free_count(self.term)

    @property
    def genus(self) -> int:
        return terms.genus(self.term)

    def __str__(self) -> str:
        return str(self.term)


def unit() -> OperadElement:
    return OperadElement(Circle(1))


def disc() -> OperadElement:
    return OperadElement(terms.DISC)


def graft_all(outer: Term, args: Sequence[Term]) -> Term:
    """Simultaneous grafting with block relabeling, without normalizing."""
    n = terms.free_count(outer)
    if len(args) != n:
        raise ValueError(f"arity {n} element given {len(args)} arguments")
    offs = perms.offsets([terms.free_count(a) for a in args])
    mapping = {}
    for i, a in enumerate(args):
        shift = {v: v + offs[i] for v in terms.slot_labels(a)}
        mapping[i + 1] = terms.map_labels(a, shift)
    return terms.check_labels(terms.as_whole(terms.substitute(outer, mapping)))


def gamma_bar(outer: OperadElement, args: Sequence[OperadElement]) -> OperadElement:
    return OperadElement(normal_form(graft_all(outer.term, [a.term for a in args])))


def sigma_act(elem: OperadElement, sigma: perms.Perm) -> OperadElement:
    """Relabel slot ``i`` as ``sigma(i)``.

    No rule looks at labels, so a relabeled normal form is still normal.
    """
    if len(sigma) != elem.arity:
        raise ValueError(f"permutation of size {len(sigma)} on arity {elem.arity}")
    return OperadElement(terms.relabel(elem.term, sigma))


def project_labels(elem: OperadElement) -> perms.Perm:
    """The labels of the slots in planar order, as an ordering of 1..k."""
    return elem.signature.labeling


# -- free monad at object level ----------------------------------------------


class _Basepoint:
    """The added basepoint of a pointed carrier."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "*"

    def __reduce__(self):
        return (_Basepoint, ())


BASEPOINT = _Basepoint()


@dataclass(frozen=True)
class MTerm:
    """``top`` with ``leaves[i - 1]`` attached at the slot labeled ``i``.

    Instances are kept in a canonical representative of the symmetric-group
    quotient: the slots of ``top`` are labeled 1..k in planar order, and no
    leaf is a basepoint (a basepoint leaf is capped off by a disc).  Both the
    added ``BASEPOINT`` and the disc term, which is the basepoint of ``M(Y)``,
    count as basepoints.
    """

    top: OperadElement
    leaves: tuple

    @classmethod
    def make(cls, top: OperadElement, leaves: Sequence[Any]) -> "MTerm":
        leaves = tuple(leaves)
        if len(leaves) != top.arity:
            raise ValueError(f"arity {top.arity} element given {len(leaves)} leaves")
        if any(is_basepoint(x) for x in leaves):
            caps = [terms.DISC if is_basepoint(x) else Circle(1) for x in leaves]
            top = OperadElement(normal_form(graft_all(top.term, caps)))
            leaves = tuple(x for x in leaves if not is_basepoint(x))
        labeling = project_labels(top)
        # planar position p carries label labeling[p-1]; make it carry p
        to_planar = perms.inverse(labeling)
        top = OperadElement(terms.relabel(top.term, to_planar))
        leaves = tuple(leaves[label - 1] for label in labeling)
        return cls(top, leaves)

    @property
    def arity(self) -> int:
        return len(self.leaves)

    def __str__(self) -> str:
        return f"({self.top}; {', '.join(map(str, self.leaves))})"


def is_basepoint(x: Any) -> bool:
    return x is BASEPOINT or (isinstance(x, MTerm) and not x.leaves and x.top.term == terms.DISC)


def eta_m(x: Any) -> MTerm:
    return MTerm.make(unit(), [x])


def m_map(f: Callable[[Any], Any], t: MTerm) -> MTerm:
    """The functor M on a map of carriers."""
    return MTerm.make(t.top, [f(x) for x in t.leaves])


def mu_m(t: MTerm) -> MTerm:
    """Flatten an M-term whose leaves are M-terms."""
    inner = list(t.leaves)
    for x in inner:
        if not isinstance(x, MTerm):
            raise TypeError(f"leaf {x!r} is not an M-term")
    top = gamma_bar(t.top, [x.top for x in inner])
    leaves = [y for x in inner for y in x.leaves]
    return MTerm.make(top, leaves)


def assembly_m(a: Any, t: MTerm) -> MTerm:
    """``(a, p, x1..xk) -> (p, (a, x1), ..., (a, xk))``."""
    return MTerm.make(t.top, [(a, x) for x in t.leaves])


__all__ = [
    "OperadElement", "unit", "disc", "gamma_bar", "graft_all", "sigma_act",
    "project_labels", "MTerm", "eta_m", "mu_m", "m_map", "assembly_m", "BASEPOINT",
    "is_basepoint",
]
