"""Surface terms built from disc, pants and torus generators.

A term is a rooted planar tree.  ``Pants`` has two child positions, ``Torus``
one, ``Disc`` none; an unfilled position holds a ``Slot`` carrying a positive
label.  ``Circle`` is a stand-alone atom (the unit surface) and never occurs
below the root.

Text syntax::

    term := "D" | "T(" term ")" | "P(" term "," term ")" | "@" INT | "O@" INT
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from . import perms


class Generator(enum.Enum):
    DISC = "D"
    PANTS = "P"
    TORUS = "T"

    @property
    def arity(self) -> int:
        return {"D": 0, "P": 2, "T": 1}[self.value]


@dataclass(frozen=True, slots=True)
class Disc:
    def __str__(self) -> str:
        return "D"


@dataclass(frozen=True, slots=True)
class Torus:
    child: "Term"

    def __str__(self) -> str:
        return f"T({self.child})"


@dataclass(frozen=True, slots=True)
class Pants:
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        return f"P({self.left},{self.right})"


@dataclass(frozen=True, slots=True)
class Slot:
    label: int

    def __str__(self) -> str:
        return f"@{self.label}"


@dataclass(frozen=True, slots=True)
class Circle:
    label: int = 1

    def __str__(self) -> str:
        return f"O@{self.label}"


Term = Union[Disc, Torus, Pants, Slot, Circle]

DISC = Disc()


class TermSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


class LabelError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceSignature:
    genus: int
    free_count: int
    labeling: tuple[int, ...]  # labels in planar left-to-right slot order


def children(t: Term) -> tuple[Term, ...]:
    if isinstance(t, Pants):
        return (t.left, t.right)
    if isinstance(t, Torus):
        return (t.child,)
    return ()


def generator(t: Term) -> Generator | None:
    if isinstance(t, Disc):
        return Generator.DISC
    if isinstance(t, Pants):
        return Generator.PANTS
    if isinstance(t, Torus):
        return Generator.TORUS
    return None


def rebuild(t: Term, kids: Sequence[Term]) -> Term:
    if isinstance(t, Pants):
        return Pants(kids[0], kids[1])
    if isinstance(t, Torus):
        return Torus(kids[0])
    return t


def slot_labels(t: Term) -> list[int]:
    """Labels of free slots in planar order (a circle counts as one slot)."""
    out: list[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, (Slot, Circle)):
            out.append(node.label)
        else:
            stack.extend(reversed(children(node)))
    return out


def size(t: Term) -> int:
    """Node count; slots, discs and circles count as one node each."""
    return 1 + sum(size(c) for c in children(t))


def genus(t: Term) -> int:
    if isinstance(t, Torus):
        return 1 + genus(t.child)
    return sum(genus(c) for c in children(t))


def free_count(t: Term) -> int:
    return len(slot_labels(t))


def signature(t: Term) -> SurfaceSignature:
    labels = slot_labels(t)
    return SurfaceSignature(genus(t), len(labels), tuple(labels))


def check_labels(t: Term) -> Term:
    """Raise ``LabelError`` unless ``t`` is a well-formed whole term."""
    if isinstance(t, Slot):
        raise LabelError(f"bare slot {t} is not a surface; the unit is written O@1")
    _check_no_inner_circle(t, top=True)
    labels = slot_labels(t)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise LabelError(f"labels {labels} are not exactly 1..{len(labels)} in {t}")
    return t


def _check_no_inner_circle(t: Term, top: bool) -> None:
    if isinstance(t, Circle) and not top:
        raise LabelError("a circle may only appear as a whole term")
    for c in children(t):
        _check_no_inner_circle(c, top=False)


def iter_positions(t: Term, prefix: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], Term]]:
    """Pre-order walk yielding ``(path, subterm)``; paths use 0-based child indices."""
    yield prefix, t
    for i, c in enumerate(children(t)):
        yield from iter_positions(c, prefix + (i,))


def subterm(t: Term, path: Sequence[int]) -> Term:
    for i in path:
        kids = children(t)
        if i >= len(kids):
            raise IndexError(f"no child {i} below {t}")
        t = kids[i]
    return t


def replace_at(t: Term, path: Sequence[int], new: Term) -> Term:
    if not path:
        return new
    kids = list(children(t))
    i = path[0]
    kids[i] = replace_at(kids[i], path[1:], new)
    return rebuild(t, kids)


def substitute(t: Term, mapping: Mapping[int, Term]) -> Term:
    """Simultaneously replace slots by terms; no label checking.

    A circle substituted below the root becomes a slot with its label, and a
    circle at the root is itself substitutable.
    """
    if isinstance(t, (Slot, Circle)):
        if t.label not in mapping:
            return t
        return mapping[t.label]
    kids = children(t)
    if not kids:
        return t
    return rebuild(t, [_as_inner(substitute(c, mapping)) for c in kids])


def _as_inner(t: Term) -> Term:
    return Slot(t.label) if isinstance(t, Circle) else t


def as_whole(t: Term) -> Term:
    """Close up a bare slot at the root into the circle."""
    return Circle(t.label) if isinstance(t, Slot) else t


def graft(host: Term, label: int, guest: Term) -> Term:
    """Plug ``guest`` into the slot of ``host`` carrying ``label``.

    Labels are not renumbered; the caller is responsible for handing in a
    guest whose labels make the result well formed.
    """
    if label not in slot_labels(host):
        raise LabelError(f"{host} has no slot labeled {label}")
    return check_labels(as_whole(substitute(host, {label: guest})))


def map_labels(t: Term, f: Mapping[int, int]) -> Term:
    if isinstance(t, Slot):
        return Slot(f[t.label])
    if isinstance(t, Circle):
        return Circle(f[t.label])
    kids = children(t)
    if not kids:
        return t
    return rebuild(t, [map_labels(c, f) for c in kids])


def relabel(t: Term, perm: perms.Perm) -> Term:
    """Left action of the symmetric group: slot label ``i`` becomes ``perm(i)``."""
    n = free_count(t)
    perm = perms.check_perm(perm)
    if len(perm) != n:
        raise ValueError(f"permutation of size {len(perm)} cannot act on {n} slots")
    return map_labels(t, {i + 1: v for i, v in enumerate(perm)})


def render(t: Term) -> str:
    return str(t)


def parse(text: str, check: bool = True) -> Term:
    """Parse the text syntax; with ``check`` the result must be a whole term."""
    parser = _Parser(text)
    term = parser.term()
    parser.skip_ws()
    if parser.pos != len(text):
        raise TermSyntaxError("trailing input", parser.pos, text)
    return check_labels(term) if check else term


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise TermSyntaxError(f"expected {ch!r}, found {found!r}", self.pos, self.text)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise TermSyntaxError("expected a label", start, self.text)
        value = int(self.text[start:self.pos])
        if value < 1:
            raise TermSyntaxError("labels are positive integers", start, self.text)
        return value

    def term(self) -> Term:
        ch = self.peek()
        if ch == "D":
            self.pos += 1
            return DISC
        if ch == "T":
            self.pos += 1
            self.expect("(")
            inner = self.term()
            self.expect(")")
            return Torus(inner)
        if ch == "P":
            self.pos += 1
            self.expect("(")
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect(")")
            return Pants(left, right)
        if ch == "@":
            self.pos += 1
            return Slot(self.integer())
        if ch == "O":
            self.pos += 1
            self.expect("@")
            return Circle(self.integer())
        raise TermSyntaxError(f"unexpected {ch or 'end of input'!r}", self.pos, self.text)


def to_json(t: Term) -> dict:
    if isinstance(t, Slot):
        return {"kind": "free", "label": t.label, "children": []}
    if isinstance(t, Circle):
        return {"kind": "circle", "label": t.label, "children": []}
    return {"kind": generator(t).value, "children": [to_json(c) for c in children(t)]}


def from_json(data: dict, check: bool = True) -> Term:
    def build(d: dict) -> Term:
        kind = d["kind"]
        kids = [build(c) for c in d.get("children", [])]
        if kind == "free":
            return Slot(int(d["label"]))
        if kind == "circle":
            return Circle(int(d["label"]))
        gen = Generator(kind)
        if len(kids) != gen.arity:
            raise ValueError(f"{kind} expects {gen.arity} children, got {len(kids)}")
        return {"D": lambda: DISC, "T": lambda: Torus(*kids), "P": lambda: Pants(*kids)}[kind]()

    t = build(data)
    return check_labels(t) if check else t
