"""Words in faces and degeneracies, and their canonical factorization.

Words are written in composition order, leftmost applied last, exactly as
``s1 s0 d2 d4`` is read "apply d4, then d2, then s0, then s1".  An operator
from degree ``p`` to degree ``q`` has the unique canonical shape::

    s_{j_t} ... s_{j_1} d_{i_s} ... d_{i_1}
    0 <= i_s < ... < i_1 <= p,   0 <= j_1 < ... < j_t,   q - t + s = p

reached by rewriting with the simplicial identities.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Gen = tuple[str, int]  # ("d", i) or ("s", j)

_TOKEN = re.compile(r"^(d|s)(\d+)$")


class OperatorError(ValueError):
    pass


def parse_word(text: str) -> list[Gen]:
    word = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.match(tok)
        if not m:
            raise OperatorError(f"bad token {tok!r}; expected d<i> or s<j>")
        word.append((m.group(1), int(m.group(2))))
    return word


def format_word(word: Sequence[Gen]) -> str:
    return " ".join(f"{k}{i}" for k, i in word) or "id"


def target_degree(word: Sequence[Gen], p: int) -> int:
    """Degree reached by applying ``word`` to a ``p``-simplex; validates indices."""
    deg = p
    for kind, i in reversed(word):
        if kind == "d":
            if deg < 1 or not 0 <= i <= deg:
                raise OperatorError(f"d{i} does not act in degree {deg}")
            deg -= 1
        else:
            if not 0 <= i <= deg:
                raise OperatorError(f"s{i} does not act in degree {deg}")
            deg += 1
    return deg


def _rewrite_pair(a: Gen, b: Gen) -> list[Gen] | None:
    """One simplicial identity on the written pair ``a b``; None if already ordered."""
    (ka, i), (kb, j) = a, b
    if ka == "d" and kb == "s":
        if i < j:
            return [("s", j - 1), ("d", i)]
        if i in (j, j + 1):
            return []
        return [("s", j), ("d", i - 1)]
    if ka == "d" and kb == "d" and i >= j:
        return [("d", j), ("d", i + 1)]
    if ka == "s" and kb == "s" and i <= j:
        return [("s", j + 1), ("s", i)]
    return None


def canonical_word(word: Sequence[Gen], p: int) -> list[Gen]:
    """Rewrite to canonical form (degeneracies left, faces right)."""
    target_degree(word, p)
    w = list(word)
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(w) - 1:
            rep = _rewrite_pair(w[k], w[k + 1])
            if rep is None:
                k += 1
                continue
            w[k:k + 2] = rep
            changed = True
            k = max(k - 1, 0)
    return w


def is_canonical(word: Sequence[Gen]) -> bool:
    """Degeneracies then faces, strictly decreasing / increasing indices as written."""
    kinds = [k for k, _ in word]
    n_s = kinds.count("s")
    if kinds != ["s"] * n_s + ["d"] * (len(word) - n_s):
        return False
    degs = [i for _, i in word[:n_s]]
    faces = [i for _, i in word[n_s:]]
    return all(a > b for a, b in zip(degs, degs[1:])) and all(a < b for a, b in zip(faces, faces[1:]))


@dataclass(frozen=True)
class SimplicialOperator:
    """A morphism of the opposite simplex category, ``source`` to ``target``.

    ``faces`` holds ``(i_1, ..., i_s)`` and ``degeneracies`` holds
    ``(j_1, ..., j_t)``, both in application order.
    """

    source: int
    target: int
    faces: tuple[int, ...] = ()
    degeneracies: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        i, j = self.faces, self.degeneracies
        if any(a <= b for a, b in zip(i, i[1:])) or any(a >= b for a, b in zip(j, j[1:])):
            raise OperatorError(f"indices out of canonical order: faces {i}, degeneracies {j}")
        if i and (i[0] > self.source or i[-1] < 0):
            raise OperatorError("face index out of range")
        if self.target - len(j) + len(i) != self.source:
            raise OperatorError("degree bookkeeping q - t + s = p fails")
        target_degree(self.word, self.source)

    @classmethod
    def from_word(cls, word: Sequence[Gen] | str, p: int) -> "SimplicialOperator":
        if isinstance(word, str):
            word = parse_word(word)
        canon = canonical_word(word, p)
        q = target_degree(canon, p)
        degs = tuple(i for k, i in reversed(canon) if k == "s")
        faces = tuple(i for k, i in reversed(canon) if k == "d")
        return cls(p, q, faces, degs)

    @classmethod
    def identity(cls, p: int) -> "SimplicialOperator":
        return cls(p, p)

    @classmethod
    def face(cls, i: int, p: int) -> "SimplicialOperator":
        return cls(p, p - 1, (i,), ())

    @classmethod
    def degeneracy(cls, j: int, p: int) -> "SimplicialOperator":
        return cls(p, p + 1, (), (j,))

    @property
    def word(self) -> list[Gen]:
        """Written order."""
        return [("s", j) for j in reversed(self.degeneracies)] + [("d", i) for i in reversed(self.faces)]

    def generators(self) -> list[Gen]:
        """Application order."""
        return list(reversed(self.word))

    def __str__(self) -> str:
        return format_word(self.word)

    def to_delta_map(self) -> tuple[int, ...]:
        """The order-preserving map ``[target] -> [source]`` this operator induces."""
        return delta_map_of_word(self.word, self.source)


def compose(a: SimplicialOperator, b: SimplicialOperator) -> SimplicialOperator:
    """``a`` after ``b``."""
    if b.target != a.source:
        raise OperatorError(f"cannot apply an operator from {a.source} after one landing in {b.target}")
    return SimplicialOperator.from_word(a.word + b.word, b.source)


def delta_map_of_word(word: Sequence[Gen], p: int) -> tuple[int, ...]:
    """Compose the coface/codegeneracy maps of a word directly; an oracle route."""
    q = target_degree(word, p)
    m = list(range(q + 1))
    for kind, i in word:  # leftmost generator is applied last, so its map is innermost
        if kind == "s":
            m = [v if v <= i else v - 1 for v in m]
        else:
            m = [v if v < i else v + 1 for v in m]
    return tuple(m)


def operator_from_delta_map(theta: Sequence[int], p: int) -> SimplicialOperator:
    """Read the canonical factorization off an order-preserving ``[q] -> [p]``."""
    theta = tuple(theta)
    if any(a > b for a, b in zip(theta, theta[1:])) or not theta or theta[-1] > p or theta[0] < 0:
        raise OperatorError(f"{theta} is not an order-preserving map into [{p}]")
    image = sorted(set(theta))
    faces = tuple(sorted((i for i in range(p + 1) if i not in image), reverse=True))
    degs = tuple(j for j in range(len(theta) - 1) if theta[j] == theta[j + 1])
    return SimplicialOperator(p, len(theta) - 1, faces, degs)


def words(p: int, length: int) -> Iterator[list[Gen]]:
    """All valid words of exactly ``length`` generators acting on degree ``p``."""

    def extend(prefix_rev: list[Gen], deg: int, left: int) -> Iterator[list[Gen]]:
        if left == 0:
            yield list(reversed(prefix_rev))
            return
        if deg >= 1:
            for i in range(deg + 1):
                yield from extend(prefix_rev + [("d", i)], deg - 1, left - 1)
        for j in range(deg + 1):
            yield from extend(prefix_rev + [("s", j)], deg + 1, left - 1)

    return extend([], p, length)


def all_canonical(p: int, q: int) -> Iterable[SimplicialOperator]:
    """Every operator ``p -> q`` (finite: order-preserving maps ``[q] -> [p]``)."""
    import itertools

    for theta in itertools.combinations_with_replacement(range(p + 1), q + 1):
        yield operator_from_delta_map(theta, p)
