"""Checking a combinatorial simplicial homotopy ``h_0..h_q : X_q -> Y_{q+1}``.

With ``f`` and ``g : X -> Y`` the identities are::

    d_0 h_0 = f                 d_{q+1} h_q = g
    d_i h_j = h_{j-1} d_i       i < j
    d_{j+1} h_{j+1} = d_{j+1} h_j
    d_i h_j = h_j d_{i-1}       i > j + 1
    s_i h_j = h_{j+1} s_i       i <= j
    s_i h_j = h_j s_{i-1}       i > j
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable


@dataclass
class HomotopyReport:
    checked: int = 0
    witness: dict | None = None
    degrees: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.ok


class _Failure(Exception):
    pass


def check_simplicial_homotopy(
    h: Callable[[int, Any], Any],
    f: Callable[[Any], Any],
    g: Callable[[Any], Any],
    source: Any,
    target: Any,
    simplices: Callable[[int], Iterable[Any]],
    max_degree: int,
) -> HomotopyReport:
    """Verify every identity on every simplex of degree ``<= max_degree``.

    ``source`` and ``target`` supply ``face(x, i)`` and ``degeneracy(x, i)``;
    ``h(j, x)`` is ``h_j`` applied to a ``q``-simplex.  The first failing
    identity is reported together with its witness simplex.
    """
    rep = HomotopyReport()
    d, s = target.face, target.degeneracy
    sd, ss = source.face, source.degeneracy

    def expect(name: str, x: Any, lhs: Any, rhs: Any) -> None:
        rep.checked += 1
        if lhs != rhs:
            rep.witness = {"identity": name, "simplex": str(x), "lhs": str(lhs), "rhs": str(rhs)}
            raise _Failure

    try:
        for q in range(max_degree + 1):
            rep.degrees.append(q)
            for x in simplices(q):
                hs = [h(j, x) for j in range(q + 1)]
                expect("d0 h0 = f", x, d(hs[0], 0), f(x))
                expect(f"d{q + 1} h{q} = g", x, d(hs[q], q + 1), g(x))
                for j in range(q + 1):
                    for i in range(q + 2):
                        if i < j:
                            expect(f"d{i} h{j} = h{j - 1} d{i}", x, d(hs[j], i), h(j - 1, sd(x, i)))
                        elif i > j + 1:
                            expect(f"d{i} h{j} = h{j} d{i - 1}", x, d(hs[j], i), h(j, sd(x, i - 1)))
                    if j < q:
                        expect(f"d{j + 1} h{j + 1} = d{j + 1} h{j}", x, d(hs[j + 1], j + 1), d(hs[j], j + 1))
                    for i in range(q + 2):
                        if i <= j:
                            expect(f"s{i} h{j} = h{j + 1} s{i}", x, s(hs[j], i), h(j + 1, ss(x, i)))
                        else:
                            expect(f"s{i} h{j} = h{j} s{i - 1}", x, s(hs[j], i), h(j, ss(x, i - 1)))
    except _Failure:
        pass
    return rep


def constant_homotopy(f: Callable[[Any], Any], target: Any) -> Callable[[int, Any], Any]:
    """``h_j = s_j f``, a homotopy from ``f`` to itself."""
    return lambda j, x: target.degeneracy(f(x), j)
