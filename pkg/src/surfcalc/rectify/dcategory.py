"""The indexing categories D and D~ for rectifying a map of simplicial objects.

Objects are ``E_p`` and ``F_p``.  Each full subcategory on one letter is the
opposite simplex category, and ``f_p : E_p -> F_p`` commutes with every face
and degeneracy in D.  In D~ the relation ``d_p f_p = f_{p-1} d_p`` is dropped,
and the space of morphisms sitting over ``g : E_p -> F_q`` is a simplex of
dimension ``d(g)``, the number of top faces ``d_p, d_{p-1}, ...`` that ``g``
applies first.

Words are written in composition order, leftmost applied last, with the
token ``f`` for the comparison map: ``"d4 f"`` on ``E_4`` applies ``f_4``
and then ``d_4``.  Barycentric coordinates are exact ``Fraction``s, and the
vertex ``g_k`` (``f`` preceded by ``k`` top faces) is coordinate ``d(g) - k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..simplicial.operators import (Gen, OperatorError, SimplicialOperator, canonical_word,
                                    target_degree)

Obj = tuple[str, int]  # ("E", p) or ("F", p)
Token = tuple[str, int]  # ("d", i), ("s", j) or ("f", 0)

F_TOKEN: Token = ("f", 0)
_TOKEN = re.compile(r"^(?:(d|s)(\d+)|(f)(?:_?(\d+))?)$")


class DWordError(ValueError):
    pass


def parse_dword(text: str) -> list[Token]:
    out: list[Token] = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.match(tok)
        if not m:
            raise DWordError(f"bad token {tok!r}; expected d<i>, s<j> or f")
        out.append(F_TOKEN if m.group(3) else (m.group(1), int(m.group(2))))
    return out


def format_dword(word: Sequence[Token]) -> str:
    return " ".join("f" if k == "f" else f"{k}{i}" for k, i in word) or "id"


def split_at_f(word: Sequence[Token]) -> tuple[list[Gen], list[Gen]] | None:
    """``(left, right)`` around the single ``f``, or None when there is no ``f``."""
    n = sum(1 for k, _ in word if k == "f")
    if n > 1:
        raise DWordError("a morphism of D contains f at most once")
    if n == 0:
        return None
    at = next(i for i, (k, _) in enumerate(word) if k == "f")
    return list(word[:at]), list(word[at + 1:])


# -- D -----------------------------------------------------------------------


@dataclass(frozen=True)
class DMorphism:
    """``op`` on the target side, preceded by ``f_p`` when going from E to F."""

    source: Obj
    target: Obj
    op: SimplicialOperator

    def __post_init__(self) -> None:
        (ks, p), (kt, q) = self.source, self.target
        if ks == "F" and kt == "E":
            raise DWordError("there are no morphisms from F to E")
        if (self.op.source, self.op.target) != (p, q):
            raise DWordError("operator degrees do not match the endpoints")

    @property
    def has_f(self) -> bool:
        return self.source[0] == "E" and self.target[0] == "F"

    @classmethod
    def from_word(cls, word: Sequence[Token] | str, p: int, kind: str = "E") -> "DMorphism":
        """Project a word to D, where ``f`` commutes with everything."""
        if isinstance(word, str):
            word = parse_dword(word)
        parts = split_at_f(word)
        if parts is None:
            q = target_degree(word, p)
            return cls((kind, p), (kind, q), SimplicialOperator.from_word(list(word), p))
        left, right = parts
        m = target_degree(right, p)
        target_degree(left, m)
        op = SimplicialOperator.from_word(left + right, p)
        return cls(("E", p), ("F", op.target), op)

    @property
    def word(self) -> list[Token]:
        return list(self.op.word) + ([F_TOKEN] if self.has_f else [])

    def __str__(self) -> str:
        return format_dword(self.word)


def identity(obj: Obj) -> DMorphism:
    return DMorphism(obj, obj, SimplicialOperator.identity(obj[1]))


def compose_d(a: DMorphism, b: DMorphism) -> DMorphism:
    """``a`` after ``b`` in D."""
    if b.target != a.source:
        raise DWordError(f"cannot compose {a.source}<-... after ...->{b.target}")
    if a.has_f:  # b is on the E side; slide it past f
        return DMorphism.from_word(list(a.op.word) + [F_TOKEN] + list(b.op.word), b.source[1])
    return DMorphism.from_word(list(a.op.word) + b.word, b.source[1], b.source[0])


def degeneracy_degree(g: DMorphism) -> int:
    """Length of the run ``i_1 = p, i_2 = p - 1, ...`` among the first faces applied."""
    if not g.has_f:
        return 0
    p = g.source[1]
    k = 0
    for i in g.op.faces:  # application order, decreasing
        if i != p - k:
            break
        k += 1
    return k


def vertex_word(g: DMorphism, k: int) -> list[Token]:
    """``g_k``: the first ``k`` faces are applied before ``f``."""
    d = degeneracy_degree(g)
    if not 0 <= k <= d:
        raise IndexError(f"vertex {k} of a {d}-simplex")
    if not g.has_f:
        return g.word
    faces = g.op.faces
    left = [("s", j) for j in reversed(g.op.degeneracies)] + [("d", i) for i in reversed(faces[k:])]
    right = [("d", i) for i in reversed(faces[:k])]
    return left + [F_TOKEN] + right


def vertices(g: DMorphism) -> list[list[Token]]:
    return [vertex_word(g, k) for k in range(degeneracy_degree(g) + 1)]


# -- D~ vertices ------------------------------------------------------------------


def canonical_vertex(word: Sequence[Token] | str, p: int) -> tuple[DMorphism, int]:
    """Identify a word with one ``f`` as the vertex ``(g, k)`` of D~ it equals.

    Degeneracies always pass ``f``; a face passes only while it is not the
    top face of its source.  The top faces left behind form the run ``k``.
    """
    if isinstance(word, str):
        word = parse_dword(word)
    parts = split_at_f(word)
    if parts is None:
        raise DWordError("a vertex word needs f")
    left, right = parts
    right = canonical_word(right, p)
    m = target_degree(right, p)
    target_degree(left, m)
    n_s = sum(1 for kd, _ in right if kd == "s")
    degs, faces = right[:n_s], right[n_s:]
    left = left + degs  # s_j f = f s_j for every j
    f_degree = m - len(degs)  # degree where f now sits
    while faces:
        i = faces[0][1]  # leftmost written face is applied last
        if i > f_degree:  # top face of E_{f_degree + 1}: stuck
            break
        left.append(faces.pop(0))
        f_degree += 1
    g = DMorphism.from_word(left + [F_TOKEN] + faces, p)
    k = len(faces)
    if k > degeneracy_degree(g):
        raise AssertionError(f"vertex {k} exceeds d(g) for {format_dword(word)}")
    return g, k


def minimal_degree(word: Sequence[Token] | str) -> int:
    """The least ``p`` such that the word makes sense starting from ``E_p``."""
    if isinstance(word, str):
        word = parse_dword(word)
    for p in range(len(word) + max([i for _, i in word], default=0) + 1):
        try:
            DMorphism.from_word(word, p)
            return p
        except (DWordError, OperatorError):
            continue
    raise DWordError(f"{format_dword(word)} is not a valid word from any E_p")


# -- D~ morphisms -------------------------------------------------------------------


@dataclass(frozen=True)
class DTildeMorphism:
    """A point of the simplex over ``base`` (``(1,)`` when the simplex is a point)."""

    base: DMorphism
    point: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        d = degeneracy_degree(self.base)
        if len(self.point) != d + 1:
            raise ValueError(f"need {d + 1} barycentric coordinates, got {len(self.point)}")
        if any(t < 0 for t in self.point) or sum(self.point) != 1:
            raise ValueError(f"{self.point} is not a point of the standard simplex")

    @property
    def source(self) -> Obj:
        return self.base.source

    @property
    def target(self) -> Obj:
        return self.base.target

    @property
    def dim(self) -> int:
        return len(self.point) - 1

    @classmethod
    def lift(cls, g: DMorphism) -> "DTildeMorphism":
        """The unique lift of a morphism whose simplex is a point."""
        if degeneracy_degree(g) != 0:
            raise ValueError(f"{g} sits under a {degeneracy_degree(g)}-simplex; pick a point")
        return cls(g, (Fraction(1),))

    @classmethod
    def vertex(cls, g: DMorphism, k: int) -> "DTildeMorphism":
        d = degeneracy_degree(g)
        if not 0 <= k <= d:
            raise IndexError(f"vertex {k} of a {d}-simplex")
        pt = [Fraction(0)] * (d + 1)
        pt[d - k] = Fraction(1)
        return cls(g, tuple(pt))

    @classmethod
    def barycenter(cls, g: DMorphism) -> "DTildeMorphism":
        d = degeneracy_degree(g)
        return cls(g, (Fraction(1, d + 1),) * (d + 1))

    def vertex_weights(self) -> dict[int, Fraction]:
        """Weight of vertex ``k`` for every ``k`` with nonzero weight."""
        d = self.dim
        return {k: self.point[d - k] for k in range(d + 1) if self.point[d - k]}

    def to_json(self) -> dict:
        return {"word": str(self.base), "source": list(self.source), "target": list(self.target),
                "point": [str(t) for t in self.point]}

    def __str__(self) -> str:
        if self.dim == 0:
            return str(self.base)
        return f"{self.base} @ ({', '.join(map(str, self.point))})"


_POINT = re.compile(r"^(.*?)\s*(?:@\s*\(([^)]*)\)|#\s*(\d+))?\s*$")


def parse_dtilde(text: str, p: int, kind: str = "E") -> DTildeMorphism:
    """``"<word>"``, ``"<word> #k"`` (vertex ``k``) or ``"<word> @ (t_0, ..., t_d)"``."""
    m = _POINT.match(text)
    if not m:
        raise DWordError(f"cannot read {text!r}")
    g = DMorphism.from_word(m.group(1), p, kind)
    if m.group(2) is not None:
        return DTildeMorphism(g, tuple(Fraction(t.strip()) for t in m.group(2).split(",")))
    if m.group(3) is not None:
        return DTildeMorphism.vertex(g, int(m.group(3)))
    return DTildeMorphism.lift(g)


def compose_dtilde(a: DTildeMorphism | DMorphism, b: DTildeMorphism | DMorphism) -> DTildeMorphism:
    """``a`` after ``b``: vertexwise by the relations, extended affinely."""
    if isinstance(a, DMorphism):
        a = DTildeMorphism.lift(a)
    if isinstance(b, DMorphism):
        b = DTildeMorphism.lift(b)
    if b.target != a.source:
        raise DWordError(f"cannot compose: {b.target} is not {a.source}")
    p = b.source[1]
    if not (a.base.has_f or b.base.has_f):
        return DTildeMorphism.lift(compose_d(a.base, b.base))
    if a.base.has_f:
        g, weights = a.base, a.vertex_weights()
        words = {k: vertex_word(g, k) + list(b.base.op.word) for k in weights}
    else:
        g, weights = b.base, b.vertex_weights()
        words = {k: list(a.base.op.word) + vertex_word(g, k) for k in weights}
    images = {k: canonical_vertex(w, p) for k, w in words.items()}
    bases = {img[0] for img in images.values()}
    if len(bases) != 1:
        raise AssertionError("vertices of one simplex landed over different morphisms")
    base = bases.pop()
    d = degeneracy_degree(base)
    point = [Fraction(0)] * (d + 1)
    for k, t in weights.items():
        point[d - images[k][1]] += t
    return DTildeMorphism(base, tuple(point))


def vertex_map(a: DMorphism | None, g: DMorphism, b: DMorphism | None) -> list[int]:
    """Where the vertices of the simplex over ``g`` go under ``a o - o b``."""
    out = []
    for k in range(degeneracy_degree(g) + 1):
        w = (list(a.op.word) if a else []) + vertex_word(g, k) + (list(b.op.word) if b else [])
        out.append(canonical_vertex(w, b.source[1] if b else g.source[1])[1])
    return out


# -- enumeration ---------------------------------------------------------------------


def op_words(p: int, length: int) -> Iterator[list[Gen]]:
    from ..simplicial.operators import words
    return words(p, length)


def f_words(p: int, length: int) -> Iterator[list[Token]]:
    """Every word with one ``f`` and ``length`` face/degeneracy letters, from ``E_p``."""
    for right_len in range(length + 1):
        for right in op_words(p, right_len):
            m = target_degree(right, p)
            for left in op_words(m, length - right_len):
                yield list(left) + [F_TOKEN] + list(right)


def morphisms_e_to_f(p: int, q: int) -> list[DMorphism]:
    """All of ``D(E_p, F_q)``."""
    from ..simplicial.operators import all_canonical
    return [DMorphism(("E", p), ("F", q), op) for op in all_canonical(p, q)]


def generators(obj: Obj) -> list[DMorphism]:
    """Single faces and degeneracies out of ``obj``."""
    kind, p = obj
    out = [DMorphism(obj, (kind, p + 1), SimplicialOperator.degeneracy(j, p)) for j in range(p + 1)]
    if p >= 1:
        out += [DMorphism(obj, (kind, p - 1), SimplicialOperator.face(i, p)) for i in range(p + 1)]
    return out


# -- brute-force closure --------------------------------------------------------------


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _neighbors(word: tuple[Token, ...], p: int) -> Iterator[tuple[Token, ...]]:
    """One relation of D~ applied at one adjacent pair (either direction covered by union)."""
    from ..simplicial.operators import _rewrite_pair

    # degree of the object each letter starts from, walking right to left
    degs = [0] * len(word)
    deg = p
    for pos in reversed(range(len(word))):
        degs[pos] = deg
        kind, i = word[pos]
        deg += 1 if kind == "s" else (-1 if kind == "d" else 0)
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        if a[0] != "f" and b[0] != "f":
            rep = _rewrite_pair(a, b)
            if rep is not None:
                yield word[:pos] + tuple(rep) + word[pos + 2:]
        elif a[0] == "f":  # f after b on the E side
            kind, i = b
            n = degs[pos]  # f_n
            if kind == "s":  # f_n s_i = s_i f_{n-1}
                yield word[:pos] + (b, F_TOKEN) + word[pos + 2:]
            elif i < n + 1:  # f_n d_i = d_i f_{n+1} for i < n + 1
                yield word[:pos] + (b, F_TOKEN) + word[pos + 2:]


@dataclass
class ClosureReport:
    words: int
    classes: int
    unsound: list[str]
    merged: list[str]
    vertex_count_errors: list[str]
    checked_bases: int

    @property
    def ok(self) -> bool:
        return not (self.unsound or self.merged or self.vertex_count_errors)


def relation_closure(p: int, max_length: int) -> tuple[dict, _UnionFind]:
    """Union-find over all words with one ``f`` and at most ``max_length`` other letters."""
    uf = _UnionFind()
    universe = {}
    for n in range(max_length + 1):
        for w in f_words(p, n):
            t = tuple(w)
            universe[t] = n
            uf.find(t)
    for t in universe:
        for nb in _neighbors(t, p):
            if nb in universe:
                uf.union(t, nb)
    return universe, uf


def check_against_closure(max_p: int, max_length: int) -> ClosureReport:
    """Compare ``canonical_vertex``, ``d`` and ``vertices`` with the relation closure."""
    total_words = total_classes = bases = 0
    unsound, merged, counts = [], [], []
    for p in range(max_p + 1):
        universe, uf = relation_closure(p, max_length)
        total_words += len(universe)
        by_class: dict = {}
        for t in universe:
            by_class.setdefault(uf.find(t), []).append(t)
        total_classes += len(by_class)
        vertex_of_class = {}
        for root, members in by_class.items():
            vs = {canonical_vertex(m, p) for m in members}
            if len(vs) != 1:
                unsound.append(f"p={p}: {format_dword(members[0])} class has {len(vs)} canonical vertices")
                continue
            vertex_of_class[root] = vs.pop()
        seen: dict = {}
        for root, v in vertex_of_class.items():
            if v in seen:
                merged.append(f"p={p}: distinct classes share vertex {v[0]} #{v[1]}")
            seen[v] = root
        over: dict = {}
        for g, k in seen:
            over.setdefault(g, set()).add(k)
        for g, ks in over.items():
            # every vertex word of g has len(g) letters; only judge g whose vertices all fit
            if len(g.op.word) > max_length:
                continue
            bases += 1
            d = degeneracy_degree(g)
            if ks != set(range(d + 1)):
                counts.append(f"p={p}: {g} has vertex classes {sorted(ks)} but d(g)={d}")
            for k in range(d + 1):
                if uf.find(tuple(vertex_word(g, k))) not in vertex_of_class:
                    counts.append(f"p={p}: vertex {k} of {g} missing")
    return ClosureReport(total_words, total_classes, unsound, merged, counts, bases)
