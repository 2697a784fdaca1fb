"""Permutations of {1..n} as plain tuples of images.

``perm[i - 1]`` is the image of ``i``.  Composition follows function
notation: ``compose(s, t)(i) == s(t(i))``.

The symmetric-groups (associativity) operad lives here too.  An element of
arity ``k`` is read as an *ordering*: position ``p`` carries label
``perm[p - 1]``.  This is exactly the data read off a surface by listing the
labels of its free slots in planar order.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(p)
    if not is_perm(p):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    if n is not None and len(p) != n:
        raise ValueError(f"permutation {p} has size {len(p)}, expected {n}")
    return p


def compose(s: Perm, t: Perm) -> Perm:
    """``s`` after ``t``."""
    if len(s) != len(t):
        raise ValueError("size mismatch")
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def all_perms(n: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, n + 1))


def random_perm(n: int, rng: random.Random) -> Perm:
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return tuple(p)


def transposition(n: int, i: int, j: int) -> Perm:
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


def direct_sum(*perms: Perm) -> Perm:
    """Block-diagonal sum: each summand acts on its own consecutive block."""
    out: list[int] = []
    offset = 0
    for p in perms:
        out.extend(offset + v for v in p)
        offset += len(p)
    return tuple(out)


def offsets(sizes: Sequence[int]) -> list[int]:
    acc, out = 0, []
    for s in sizes:
        out.append(acc)
        acc += s
    return out


def block_permutation(sigma: Perm, sizes: Sequence[int]) -> Perm:
    """Permute consecutive blocks as wholes.

    ``sizes[i - 1]`` is the size of source block ``i``; source block ``i`` is
    moved to target block position ``sigma(i)`` keeping its internal order.
    """
    if len(sigma) != len(sizes):
        raise ValueError("need one block size per permuted letter")
    target_sizes = [0] * len(sizes)
    for i, s in enumerate(sizes):
        target_sizes[sigma[i] - 1] = s
    src, tgt = offsets(sizes), offsets(target_sizes)
    out = [0] * sum(sizes)
    for i, s in enumerate(sizes):
        for q in range(1, s + 1):
            out[src[i] + q - 1] = tgt[sigma[i] - 1] + q
    return tuple(out)


def operad_compose(sigma: Perm, taus: Sequence[Perm]) -> Perm:
    """Composition in the symmetric-groups operad, orderings convention.

    Walking positions of ``sigma`` left to right, the block of ``taus[l - 1]``
    (``l`` the label met) is spliced in, shifted by the total size of the
    blocks with smaller label.
    """
    if len(sigma) != len(taus):
        raise ValueError("arity mismatch")
    offs = offsets([len(t) for t in taus])
    out: list[int] = []
    for label in sigma:
        tau = taus[label - 1]
        out.extend(offs[label - 1] + v for v in tau)
    return tuple(out)


def delete_letter(p: Perm, letter: int) -> Perm:
    """Remove ``letter`` from the sequence ``p`` and close up the value gap."""
    return tuple(v if v < letter else v - 1 for v in p if v != letter)
