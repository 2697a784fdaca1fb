"""Finite simplicial sets in Eilenberg-Zilber form.

Every simplex is stored as ``Simplex(base, surj)``: a nondegenerate simplex
``base`` of dimension ``r`` and a surjective order-preserving map
``surj: [q] -> [r]`` (a tuple of length ``q + 1``), standing for the
degenerate simplex ``X(surj)(base)``.  Only nondegenerate simplices and their
faces are tabulated; everything else is derived.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .operators import Gen, SimplicialOperator


class TruncationError(ValueError):
    pass


class SimplicialIdentityError(AssertionError):
    pass


@dataclass(frozen=True, order=True)
class Simplex:
    base: Any
    surj: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.surj) - 1

    @property
    def dim(self) -> int:
        """Dimension of the underlying nondegenerate simplex."""
        return self.surj[-1]

    @property
    def is_degenerate(self) -> bool:
        return self.degree != self.dim

    def degeneracy_word(self) -> list[Gen]:
        js = [j for j in range(self.degree) if self.surj[j] == self.surj[j + 1]]
        return [("s", j) for j in reversed(js)]

    def __str__(self) -> str:
        name = _name(self.base)
        if not self.is_degenerate:
            return name
        return " ".join(f"s{j}" for _, j in self.degeneracy_word()) + " " + name


def _name(base: Any) -> str:
    return base if isinstance(base, str) else repr(base)


def coface(i: int, n: int) -> tuple[int, ...]:
    """``d^i : [n-1] -> [n]`` skipping ``i``."""
    return tuple(k if k < i else k + 1 for k in range(n))


def codegeneracy(j: int, n: int) -> tuple[int, ...]:
    """``s^j : [n+1] -> [n]`` hitting ``j`` twice."""
    return tuple(k if k <= j else k - 1 for k in range(n + 2))


def surjections(q: int, r: int) -> Iterator[tuple[int, ...]]:
    """Order-preserving surjections ``[q] -> [r]``."""
    for steps in itertools.combinations(range(q), r):
        out, v = [0], 0
        for k in range(q):
            if k in steps:
                v += 1
            out.append(v)
        yield tuple(out)


def collapse(seq: Sequence[Hashable]) -> tuple[tuple, tuple[int, ...]]:
    """Split a sequence into its runs: (distinct consecutive values, surjection)."""
    vals, surj = [], []
    for x in seq:
        if not vals or vals[-1] != x:
            vals.append(x)
        surj.append(len(vals) - 1)
    return tuple(vals), tuple(surj)


@dataclass
class FiniteSimplicialSet:
    """Nondegenerate simplices with their face tables.

    ``faces[x]`` lists ``d_0 x, ..., d_n x`` as ``Simplex`` values.  With a
    ``truncation`` bound, simplices above that degree are not known and asking
    for them raises ``TruncationError``.
    """

    dims: dict[Any, int]
    faces: dict[Any, tuple[Simplex, ...]]
    basepoint: Any = None
    truncation: int | None = None
    name: str = ""
    _by_dim: dict[int, list] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        for x, n in self.dims.items():
            fs = self.faces.get(x, ())
            if n == 0 and fs:
                raise ValueError(f"vertex {x!r} has faces")
            if n > 0 and len(fs) != n + 1:
                raise ValueError(f"{x!r} of dimension {n} needs {n + 1} faces")
            for f in fs:
                if f.degree != n - 1 or f.base not in self.dims or self.dims[f.base] != f.dim:
                    raise ValueError(f"bad face {f} of {x!r}")
            self._by_dim.setdefault(n, []).append(x)
        if self.basepoint is not None and self.dims.get(self.basepoint) != 0:
            raise ValueError("basepoint must be a vertex")

    # -- structure -----------------------------------------------------------

    @property
    def pointed(self) -> bool:
        return self.basepoint is not None

    @property
    def max_dim(self) -> int:
        return max(self.dims.values(), default=-1)

    def simplex(self, base: Any) -> Simplex:
        return Simplex(base, tuple(range(self.dims[base] + 1)))

    def base_simplex(self, degree: int = 0) -> Simplex:
        if self.basepoint is None:
            raise ValueError("unpointed simplicial set")
        return Simplex(self.basepoint, (0,) * (degree + 1))

    def is_basepoint(self, s: Simplex) -> bool:
        return s.base == self.basepoint

    def nondegenerate(self, q: int) -> list:
        self._check_degree(q)
        return list(self._by_dim.get(q, []))

    def simplices(self, q: int) -> list[Simplex]:
        self._check_degree(q)
        out = []
        for r in range(q + 1):
            for x in self._by_dim.get(r, []):
                out.extend(Simplex(x, s) for s in surjections(q, r))
        return out

    def count(self, q: int) -> int:
        return len(self.simplices(q))

    def _check_degree(self, q: int) -> None:
        if self.truncation is not None and q > self.truncation:
            raise TruncationError(f"{self.name or 'simplicial set'} is only known up to degree {self.truncation}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** n for n in self.dims.values())

    # -- simplicial operators ------------------------------------------------

    def act(self, s: Simplex, theta: Sequence[int]) -> Simplex:
        """``X(theta)(s)`` for an order-preserving ``theta: [q'] -> [q]``."""
        phi = tuple(s.surj[v] for v in theta)
        base = s.base
        while True:
            image = set(phi)
            r = self.dims[base]
            if len(image) == r + 1:
                return Simplex(base, phi)
            v = max(k for k in range(r + 1) if k not in image)
            f = self.faces[base][v]
            phi = tuple(f.surj[u if u < v else u - 1] for u in phi)
            base = f.base

    def face(self, s: Simplex, i: int) -> Simplex:
        q = s.degree
        if q < 1 or not 0 <= i <= q:
            raise IndexError(f"face {i} of a {q}-simplex")
        return self.act(s, coface(i, q))

    def degeneracy(self, s: Simplex, j: int) -> Simplex:
        q = s.degree
        if not 0 <= j <= q:
            raise IndexError(f"degeneracy {j} of a {q}-simplex")
        return Simplex(s.base, tuple(s.surj[v] for v in codegeneracy(j, q)))

    def apply_word(self, word: Sequence[Gen], s: Simplex) -> Simplex:
        """Apply a written-order word one generator at a time."""
        for kind, i in reversed(word):
            s = self.face(s, i) if kind == "d" else self.degeneracy(s, i)
        return s

    def apply_operator(self, op: SimplicialOperator, s: Simplex) -> Simplex:
        if s.degree != op.source:
            raise ValueError(f"operator from degree {op.source} applied to a {s.degree}-simplex")
        return self.act(s, op.to_delta_map())

    # -- audits --------------------------------------------------------------

    def audit(self, max_degree: int | None = None) -> list[str]:
        """Check every simplicial identity on every simplex up to ``max_degree``."""
        if max_degree is None:
            max_degree = self.max_dim + 1
            if self.truncation is not None:
                max_degree = min(max_degree, self.truncation)
        problems: list[str] = []
        for q in range(max_degree + 1):
            for x in self.simplices(q):
                problems.extend(_identities_at(self, x))
                if len(problems) > 20:
                    return problems
        return problems

    def check(self, max_degree: int | None = None) -> "FiniteSimplicialSet":
        problems = self.audit(max_degree)
        if problems:
            raise SimplicialIdentityError("; ".join(problems[:5]))
        return self

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        def enc(s: Simplex):
            if not s.is_degenerate:
                return _name(s.base)
            return {"base": _name(s.base), "surjection": list(s.surj)}

        return {
            "name": self.name,
            "basepoint": None if self.basepoint is None else _name(self.basepoint),
            "truncation": self.truncation,
            "simplices": {_name(x): n for x, n in self.dims.items()},
            "faces": {_name(x): [enc(f) for f in fs] for x, fs in self.faces.items() if fs},
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "FiniteSimplicialSet":
        if isinstance(data, str):
            data = json.loads(data)
        dims = {str(k): int(v) for k, v in data["simplices"].items()}

        def dec(f) -> Simplex:
            if isinstance(f, str):
                return Simplex(f, tuple(range(dims[f] + 1)))
            return Simplex(str(f["base"]), tuple(f["surjection"]))

        faces = {str(k): tuple(dec(f) for f in fs) for k, fs in data.get("faces", {}).items()}
        for x in dims:
            faces.setdefault(x, ())
        return cls(dims, faces, data.get("basepoint"), data.get("truncation"), data.get("name", ""))


def _identities_at(X: FiniteSimplicialSet, x: Simplex) -> list[str]:
    q = x.degree
    out = []
    d, s = X.face, X.degeneracy
    if q >= 2:
        for j in range(q + 1):
            for i in range(j):
                if d(d(x, j), i) != d(d(x, i), j - 1):
                    out.append(f"d{i}d{j} != d{j - 1}d{i} on {x}")
    for j in range(q + 1):
        y = s(x, j)
        for i in range(q + 2):
            lhs = d(y, i)
            if i < j:
                rhs = s(d(x, i), j - 1) if q >= 1 else None
            elif i in (j, j + 1):
                rhs = x
            else:
                rhs = s(d(x, i - 1), j) if q >= 1 else None
            if rhs is not None and lhs != rhs:
                out.append(f"d{i}s{j} identity fails on {x}")
        for i in range(j + 1):
            if s(s(x, j), i) != s(s(x, i), j + 1):
                out.append(f"s{i}s{j} != s{j + 1}s{i} on {x}")
    return out


# -- constructions ----------------------------------------------------------


def standard_simplex(n: int) -> FiniteSimplicialSet:
    """``Delta[n]``: nondegenerate simplices are the nonempty subsets of ``[n]``."""
    dims, faces = {}, {}
    for r in range(n + 1):
        for sub in itertools.combinations(range(n + 1), r + 1):
            dims[sub] = r
            faces[sub] = tuple(Simplex(sub[:i] + sub[i + 1:], tuple(range(r))) for i in range(r + 1)) if r else ()
    return FiniteSimplicialSet(dims, faces, name=f"Delta[{n}]")


def point() -> FiniteSimplicialSet:
    return FiniteSimplicialSet({"*": 0}, {"*": ()}, basepoint="*", name="point")


def sphere0() -> FiniteSimplicialSet:
    return FiniteSimplicialSet({"*": 0, "1": 0}, {"*": (), "1": ()}, basepoint="*", name="S0")


def circle_model() -> FiniteSimplicialSet:
    """Two vertices ``x0, x1`` and two edges ``y1, y2``, both running from ``x0`` to ``x1``.

    ``d0 y = x1`` (end) and ``d1 y = x0`` (start); pointed at ``x0``.
    """
    v = lambda name: Simplex(name, (0,))
    return FiniteSimplicialSet(
        {"x0": 0, "x1": 0, "y1": 1, "y2": 1},
        {"x0": (), "x1": (), "y1": (v("x1"), v("x0")), "y2": (v("x1"), v("x0"))},
        basepoint="x0",
        name="S1",
    )


def boundary_circle() -> FiniteSimplicialSet:
    """The minimal circle ``Delta[1] / boundary`` (one vertex, one edge)."""
    v = Simplex("v", (0,))
    return FiniteSimplicialSet({"v": 0, "e": 1}, {"v": (), "e": (v, v)}, basepoint="v", name="S1min")


def _pair_ez(u: Simplex, v: Simplex) -> tuple[tuple[Simplex, Simplex], tuple[int, ...]]:
    """EZ form of a product simplex: (nondegenerate pair, outer surjection)."""
    joint = list(zip(u.surj, v.surj))
    vals, surj = collapse(joint)
    a_surj = tuple(p for p, _ in vals)
    b_surj = tuple(q for _, q in vals)
    return (Simplex(u.base, a_surj), Simplex(v.base, b_surj)), surj


def _product_nondeg(a: Any, r: int, b: Any, s: int) -> Iterator[tuple[Simplex, Simplex]]:
    """Nondegenerate simplices of ``Delta[r] x Delta[s]`` over the pair (a, b)."""

    def paths(i: int, j: int, acc: list[tuple[int, int]]) -> Iterator[list[tuple[int, int]]]:
        if (i, j) == (r, s):
            yield acc
            return
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            if i + di <= r and j + dj <= s:
                yield from paths(i + di, j + dj, acc + [(i + di, j + dj)])

    for path in paths(0, 0, [(0, 0)]):
        yield Simplex(a, tuple(p for p, _ in path)), Simplex(b, tuple(q for _, q in path))


def product(A: FiniteSimplicialSet, B: FiniteSimplicialSet) -> FiniteSimplicialSet:
    dims, faces = {}, {}
    for a, r in A.dims.items():
        for b, s in B.dims.items():
            for pair in _product_nondeg(a, r, b, s):
                dims[pair] = pair[0].degree
    for pair, n in dims.items():
        fs = []
        for i in range(n + 1) if n else ():
            u, v = A.face(pair[0], i), B.face(pair[1], i)
            nd, surj = _pair_ez(u, v)
            fs.append(Simplex(nd, surj))
        faces[pair] = tuple(fs)
    bp = None
    if A.pointed and B.pointed:
        bp = (A.base_simplex(), B.base_simplex())
    return FiniteSimplicialSet(dims, faces, bp, _min_trunc(A, B), name=f"{A.name}x{B.name}")


def _min_trunc(A: FiniteSimplicialSet, B: FiniteSimplicialSet) -> int | None:
    ts = [t for t in (A.truncation, B.truncation) if t is not None]
    return min(ts) if ts else None


SMASH_BASE = "*"


def smash_point(A: FiniteSimplicialSet, B: FiniteSimplicialSet, u: Simplex, v: Simplex) -> Simplex:
    """The simplex ``[u, v]`` of ``smash(A, B)``."""
    if u.degree != v.degree:
        raise ValueError("smash coordinates must have equal degree")
    if A.is_basepoint(u) or B.is_basepoint(v):
        return Simplex(SMASH_BASE, (0,) * (u.degree + 1))
    nd, surj = _pair_ez(u, v)
    return Simplex(nd, surj)


def smash(A: FiniteSimplicialSet, B: FiniteSimplicialSet) -> FiniteSimplicialSet:
    """``A x B`` with the wedge ``A v B`` collapsed to the new basepoint ``"*"``."""
    if not (A.pointed and B.pointed):
        raise ValueError("smash product needs pointed simplicial sets")
    dims, faces = {SMASH_BASE: 0}, {SMASH_BASE: ()}
    for a, r in A.dims.items():
        if a == A.basepoint:
            continue
        for b, s in B.dims.items():
            if b == B.basepoint:
                continue
            for pair in _product_nondeg(a, r, b, s):
                dims[pair] = pair[0].degree
    for pair, n in dims.items():
        if pair == SMASH_BASE or n == 0:
            faces.setdefault(pair, ())
            continue
        faces[pair] = tuple(
            smash_point(A, B, A.face(pair[0], i), B.face(pair[1], i)) for i in range(n + 1)
        )
    return FiniteSimplicialSet(dims, faces, SMASH_BASE, _min_trunc(A, B), name=f"{A.name}^{B.name}")


# -- maps ----------------------------------------------------------------------


@dataclass
class SimplicialMap:
    """A map given on nondegenerate simplices."""

    source: FiniteSimplicialSet
    target: FiniteSimplicialSet
    images: dict[Any, Simplex]

    def __call__(self, s: Simplex) -> Simplex:
        return self.target.act(self.images[s.base], s.surj)

    def problems(self) -> list[str]:
        out = []
        for x, n in self.source.dims.items():
            img = self.images.get(x)
            if img is None or img.degree != n:
                out.append(f"{x!r} has no image of degree {n}")
                continue
            for i in range(n + 1) if n else ():
                if self(self.source.face(self.source.simplex(x), i)) != self.target.face(img, i):
                    out.append(f"face {i} of {x!r} not preserved")
        if self.source.pointed and self.target.pointed:
            if self.images.get(self.source.basepoint) != self.target.base_simplex():
                out.append("basepoint not preserved")
        return out

    def is_bijective_on_nondegenerate(self) -> bool:
        imgs = [self.images[x] for x in self.source.dims]
        return (all(not s.is_degenerate for s in imgs)
                and len({s.base for s in imgs}) == len(imgs) == len(self.target.dims))


def identity_map(X: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, {x: X.simplex(x) for x in X.dims})


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    return SimplicialMap(f.source, g.target, {x: g(f.images[x]) for x in f.source.dims})


def enumerate_maps(A: FiniteSimplicialSet, B: FiniteSimplicialSet, pointed: bool = True) -> list[SimplicialMap]:
    """Every simplicial map ``A -> B`` (basepoint-preserving if asked)."""
    order = sorted(A.dims, key=lambda x: (A.dims[x], repr(x)))
    out: list[SimplicialMap] = []

    def search(k: int, images: dict) -> None:
        if k == len(order):
            out.append(SimplicialMap(A, B, dict(images)))
            return
        x = order[k]
        n = A.dims[x]
        if pointed and A.pointed and x == A.basepoint:
            candidates = [B.base_simplex()]
        else:
            candidates = B.simplices(n)
        for c in candidates:
            if n and any(
                B.face(c, i) != B.act(images[A.faces[x][i].base], A.faces[x][i].surj) for i in range(n + 1)
            ):
                continue
            images[x] = c
            search(k + 1, images)
            del images[x]

    search(0, {})
    return out


def smash_maps(f: SimplicialMap, g: SimplicialMap) -> Callable[[Any], Any]:
    """``f ^ g`` acting on smash pairs ``(u, v)`` (elementwise carrier form)."""

    def h(pair):
        if pair == SMASH_BASE:
            return pair
        return (f(pair[0]), g(pair[1]))

    return h


def from_simplices(faces: Mapping[str, Sequence[str]], dims: Mapping[str, int],
                   basepoint: str | None = None, name: str = "") -> FiniteSimplicialSet:
    """Convenience constructor: faces given by names of nondegenerate simplices."""
    table = {x: tuple(Simplex(f, tuple(range(dims[f] + 1))) for f in faces.get(x, ())) for x in dims}
    return FiniteSimplicialSet(dict(dims), table, basepoint, name=name)


def iter_all(X: FiniteSimplicialSet, max_degree: int) -> Iterable[Simplex]:
    for q in range(max_degree + 1):
        yield from X.simplices(q)
