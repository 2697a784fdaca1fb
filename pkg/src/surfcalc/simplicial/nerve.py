"""Finite categories and their nerves."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .sset import FiniteSimplicialSet, Simplex


class CategoryError(ValueError):
    pass


@dataclass
class FiniteCategory:
    """Objects, named morphisms, and a composition table.

    ``compose[(g, f)]`` is ``g o f`` (``f`` first).  Identities are named
    ``id_<object>`` unless given, and their composites are filled in
    automatically.
    """

    objects: list
    morphisms: dict[str, tuple[Any, Any]]
    table: dict[tuple[str, str], str] = field(default_factory=dict)
    identities: dict[Any, str] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self) -> None:
        for x in self.objects:
            ident = self.identities.setdefault(x, f"id_{x}")
            self.morphisms.setdefault(ident, (x, x))
        for m, (s, t) in self.morphisms.items():
            if s not in self.objects or t not in self.objects:
                raise CategoryError(f"morphism {m} has unknown endpoints")
            self.table.setdefault((m, self.identities[s]), m)
            self.table.setdefault((self.identities[t], m), m)
        self._check()

    def source(self, m: str) -> Any:
        return self.morphisms[m][0]

    def target(self, m: str) -> Any:
        return self.morphisms[m][1]

    def is_identity(self, m: str) -> bool:
        return self.identities[self.source(m)] == m

    def compose(self, g: str, f: str) -> str:
        """``g`` after ``f``."""
        if self.target(f) != self.source(g):
            raise CategoryError(f"{g} o {f} is not composable")
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CategoryError(f"composite {g} o {f} missing from the table") from None

    def hom(self, x: Any, y: Any) -> list[str]:
        return [m for m, (s, t) in self.morphisms.items() if s == x and t == y]

    def _check(self) -> None:
        ms = list(self.morphisms)
        for (g, f), h in self.table.items():
            if self.morphisms[h] != (self.source(f), self.target(g)) or self.target(f) != self.source(g):
                raise CategoryError(f"composite {g} o {f} = {h} has wrong endpoints")
        for f in ms:
            for g in ms:
                if self.target(f) != self.source(g):
                    continue
                gf = self.compose(g, f)
                for h in ms:
                    if self.target(g) == self.source(h):
                        if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                            raise CategoryError(f"composition not associative at {h}, {g}, {f}")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "objects": list(self.objects),
            "morphisms": {m: list(st) for m, st in self.morphisms.items() if not self.is_identity(m)},
            "compose": [[g, f, h] for (g, f), h in self.table.items()
                        if not (self.is_identity(g) or self.is_identity(f))],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "FiniteCategory":
        if isinstance(data, str):
            data = json.loads(data)
        if "poset" in data:
            return poset(data["objects"], [tuple(r) for r in data["poset"]], data.get("name", ""))
        mors = {str(m): (st[0], st[1]) for m, st in data.get("morphisms", {}).items()}
        table = {(g, f): h for g, f, h in data.get("compose", [])}
        return cls(list(data["objects"]), mors, table, dict(data.get("identities", {})), data.get("name", ""))


def poset(elements: Sequence, relations: Iterable[tuple[Any, Any]], name: str = "") -> FiniteCategory:
    """The category of a finite poset generated by ``a <= b`` relations."""
    elements = list(elements)
    le = {(a, a) for a in elements} | {tuple(r) for r in relations}
    changed = True
    while changed:  # transitive closure
        changed = False
        for a, b in list(le):
            for c, d in list(le):
                if b == c and (a, d) not in le:
                    le.add((a, d))
                    changed = True
    if any((b, a) in le and a != b for a, b in le):
        raise CategoryError("relations are not antisymmetric")
    name_of = lambda a, b: f"id_{a}" if a == b else f"{a}<{b}"
    mors = {name_of(a, b): (a, b) for a, b in le}
    table = {}
    for a, b in le:
        for c, d in le:
            if b == c:
                table[(name_of(c, d), name_of(a, b))] = name_of(a, d)
    return FiniteCategory(elements, mors, table, name=name)


def linear_order(n: int) -> FiniteCategory:
    """``0 < 1 < ... < n``."""
    return poset(list(range(n + 1)), [(i, i + 1) for i in range(n)], name=f"[{n}]")


def terminal_category() -> FiniteCategory:
    return FiniteCategory(["*"], {}, name="1")


def monoid_category(elements: Sequence[str], product: Mapping[tuple[str, str], str], unit: str) -> FiniteCategory:
    """One object; ``product[(g, f)] = g f``."""
    mors = {m: ("*", "*") for m in elements}
    return FiniteCategory(["*"], mors, dict(product), {"*": unit}, name="monoid")


# -- nerve -----------------------------------------------------------------


def _chain_ez(C: FiniteCategory, objs: Sequence, chain: Sequence[str]) -> Simplex:
    kept = tuple(m for m in chain if not C.is_identity(m))
    surj, v = [0], 0
    for m in chain:
        if not C.is_identity(m):
            v += 1
        surj.append(v)
    base = kept if kept else objs[0]
    return Simplex(base, tuple(surj))


def nerve(C: FiniteCategory, max_degree: int | None = None) -> FiniteSimplicialSet:
    """Nondegenerate simplices are chains of non-identity morphisms.

    Without ``max_degree`` the nerve must be finite dimensional; a category
    with arbitrarily long non-identity chains needs a bound.
    """
    guard = max_degree if max_degree is not None else len(C.morphisms) + 1
    dims: dict[Any, int] = {x: 0 for x in C.objects}
    faces: dict[Any, tuple] = {x: () for x in C.objects}
    layer = [(m,) for m in C.morphisms if not C.is_identity(m)]
    q = 1
    while layer:
        if q > guard:
            if max_degree is None:
                raise CategoryError("nerve has nondegenerate simplices in every degree; pass max_degree")
            break
        for chain in layer:
            dims[chain] = q
            faces[chain] = tuple(_chain_face(C, chain, i) for i in range(q + 1))
        layer = [c + (m,) for c in layer for m in C.morphisms
                 if not C.is_identity(m) and C.source(m) == C.target(c[-1])]
        q += 1
    objects_bp = C.objects[0] if len(C.objects) == 1 else None
    return FiniteSimplicialSet(dims, faces, objects_bp, max_degree, name=f"N({C.name})")


def _chain_objects(C: FiniteCategory, chain: Sequence[str]) -> list:
    return [C.source(chain[0])] + [C.target(m) for m in chain]


def _chain_face(C: FiniteCategory, chain: Sequence[str], i: int) -> Simplex:
    objs = _chain_objects(C, chain)
    q = len(chain)
    ms = list(chain)
    if i == 0:
        ms = ms[1:]
    elif i == q:
        ms = ms[:-1]
    else:
        ms[i - 1:i + 1] = [C.compose(ms[i], ms[i - 1])]
    objs = objs[:i] + objs[i + 1:]
    return _chain_ez(C, objs, ms)


def chain_of(C: FiniteCategory, s: Simplex) -> tuple[list, list[str]]:
    """Objects and morphisms of a (possibly degenerate) nerve simplex."""
    if isinstance(s.base, tuple):
        base_objs = _chain_objects(C, s.base)
        base_ms = list(s.base)
    else:
        base_objs, base_ms = [s.base], []
    objs = [base_objs[v] for v in s.surj]
    ms = []
    for a, b in zip(s.surj, s.surj[1:]):
        ms.append(C.identities[base_objs[a]] if a == b else base_ms[a])
    return objs, ms


def chain_simplex(C: FiniteCategory, chain: Sequence[str], start: Any = None) -> Simplex:
    if not chain:
        return Simplex(start, (0,))
    for f, g in zip(chain, chain[1:]):
        if C.target(f) != C.source(g):
            raise CategoryError(f"{f} and {g} are not composable")
    return _chain_ez(C, _chain_objects(C, chain), chain)
