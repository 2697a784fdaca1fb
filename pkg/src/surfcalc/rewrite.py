"""Normal forms of surface terms.

Three rules, applied anywhere in a term (arguments may be filled or free)::

    Reassoc    P(x, P(y, z))  =>  P(P(x, y), z)
    UnitRight  P(x, D)        =>  x
    UnitLeft   P(D, x)        =>  x

When a rewrite at the root leaves a bare slot, the term is closed up into
the circle carrying that slot's label.  Every rule strictly decreases
``measure`` so rewriting terminates, and the system is confluent; see
``check_confluence``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .terms import DISC, Disc, Pants, Term, as_whole, children, replace_at, size, subterm

Position = tuple[int, ...]


class Rule(enum.Enum):
    REASSOC = "Reassoc"
    UNIT_RIGHT = "UnitRight"
    UNIT_LEFT = "UnitLeft"


def matches(rule: Rule, node: Term) -> bool:
    if not isinstance(node, Pants):
        return False
    if rule is Rule.REASSOC:
        return isinstance(node.right, Pants)
    if rule is Rule.UNIT_RIGHT:
        return isinstance(node.right, Disc)
    return isinstance(node.left, Disc)


def contract(rule: Rule, node: Term) -> Term:
    """Rewrite a matching node in place (no root close-up)."""
    if rule is Rule.REASSOC:
        inner = node.right
        return Pants(Pants(node.left, inner.left), inner.right)
    if rule is Rule.UNIT_RIGHT:
        return node.left
    return node.right


def find_redexes(t: Term) -> list[tuple[Position, Rule]]:
    """Every (position, rule) match, positions in pre-order."""
    out: list[tuple[Position, Rule]] = []

    def walk(node: Term, path: Position) -> None:
        if isinstance(node, Pants):
            for rule in Rule:
                if matches(rule, node):
                    out.append((path, rule))
        for i, c in enumerate(children(node)):
            walk(c, path + (i,))

    walk(t, ())
    return out


def is_normal(t: Term) -> bool:
    return not find_redexes(t)


class NotARedex(ValueError):
    pass


def apply_rule(t: Term, position: Position, rule: Rule) -> Term:
    node = subterm(t, position)
    if not matches(rule, node):
        raise NotARedex(f"{rule.value} does not match at {list(position)} in {t}")
    return as_whole(replace_at(t, position, contract(rule, node)))


def measure(t: Term) -> tuple[int, int]:
    """(node count, sum over pants nodes of the right subtree's node count)."""
    return size(t), _right_weight(t)


def _right_weight(t: Term) -> int:
    w = sum(_right_weight(c) for c in children(t))
    if isinstance(t, Pants):
        w += size(t.right)
    return w


# strategies pick one redex from the complete list


def _below(a: Position, b: Position) -> bool:
    """``a`` lies strictly below ``b``."""
    return len(a) > len(b) and a[: len(b)] == b


def leftmost_innermost(redexes: list[tuple[Position, Rule]], rng=None) -> tuple[Position, Rule]:
    inner = [r for r in redexes if not any(_below(o[0], r[0]) for o in redexes)]
    return min(inner, key=lambda r: r[0])


def rightmost_outermost(redexes: list[tuple[Position, Rule]], rng=None) -> tuple[Position, Rule]:
    outer = [r for r in redexes if not any(_below(r[0], o[0]) for o in redexes)]
    return max(outer, key=lambda r: r[0])


def random_choice(redexes: list[tuple[Position, Rule]], rng: random.Random | None = None):
    return (rng or random).choice(redexes)


STRATEGIES: dict[str, Callable] = {
    "leftmost-innermost": leftmost_innermost,
    "rightmost-outermost": rightmost_outermost,
    "random": random_choice,
}


@dataclass(frozen=True)
class RewriteStep:
    position: Position
    rule: Rule
    result: Term


@dataclass(frozen=True)
class RewriteTrace:
    source: Term
    steps: tuple[RewriteStep, ...] = ()

    @property
    def target(self) -> Term:
        return self.steps[-1].result if self.steps else self.source

    def replay(self) -> Term:
        t = self.source
        for step in self.steps:
            t = apply_rule(t, step.position, step.rule)
            if t != step.result:
                raise AssertionError(f"replay diverged at {step}")
        return t

    def to_json(self) -> dict:
        return {
            "source": str(self.source),
            "target": str(self.target),
            "steps": [
                {"position": list(s.position), "rule": s.rule.value, "result": str(s.result)}
                for s in self.steps
            ],
        }


class MeasureViolation(AssertionError):
    pass


def normalize(t: Term, strategy: str = "leftmost-innermost",
              rng: random.Random | None = None,
              check_measure: bool = False) -> tuple[Term, RewriteTrace]:
    pick = STRATEGIES[strategy]
    t = as_whole(t)
    source, steps = t, []
    while True:
        redexes = find_redexes(t)
        if not redexes:
            return t, RewriteTrace(source, tuple(steps))
        pos, rule = pick(redexes, rng)
        nxt = apply_rule(t, pos, rule)
        if check_measure and not measure(nxt) < measure(t):
            raise MeasureViolation(f"{rule.value} at {pos}: {t} -> {nxt}")
        steps.append(RewriteStep(pos, rule, nxt))
        t = nxt


def normal_form(t: Term) -> Term:
    return normalize(t)[0]


def successors(t: Term) -> list[Term]:
    return [apply_rule(t, p, r) for p, r in find_redexes(t)]


@dataclass
class ConfluenceReport:
    max_nodes: int
    term_count: int = 0
    normal_count: int = 0
    edge_count: int = 0
    max_path_length: int = 0
    measure_violations: list[tuple[str, str]] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.measure_violations

    def to_json(self) -> dict:
        return {
            "max_nodes": self.max_nodes,
            "term_count": self.term_count,
            "normal_count": self.normal_count,
            "edge_count": self.edge_count,
            "max_path_length": self.max_path_length,
            "measure_violations": self.measure_violations,
            "counterexamples": self.counterexamples,
        }


class RewriteGraph:
    """Memoized exploration of the full rewrite graph below given terms."""

    def __init__(self) -> None:
        self.normal_forms: dict[Term, frozenset[Term]] = {}
        self.longest: dict[Term, int] = {}
        self.edges = 0
        self.violations: list[tuple[str, str]] = []

    def explore(self, t: Term) -> frozenset[Term]:
        if t in self.normal_forms:
            return self.normal_forms[t]
        # iterative post-order keeps deep right combs off the Python stack
        stack: list[tuple[Term, list[Term] | None]] = [(t, None)]
        while stack:
            node, succ = stack.pop()
            if node in self.normal_forms:
                continue
            if succ is None:
                succ = successors(node)
                self.edges += len(succ)
                m = measure(node)
                for s in succ:
                    if not measure(s) < m:
                        self.violations.append((str(node), str(s)))
                stack.append((node, succ))
                stack.extend((s, None) for s in succ if s not in self.normal_forms)
                continue
            if not succ:
                self.normal_forms[node] = frozenset([node])
                self.longest[node] = 0
            else:
                self.normal_forms[node] = frozenset().union(*(self.normal_forms[s] for s in succ))
                self.longest[node] = 1 + max(self.longest[s] for s in succ)
        return self.normal_forms[t]


def check_confluence(max_nodes: int, terms: Iterable[Term] | None = None) -> ConfluenceReport:
    """Explore every rewrite path of every term with at most ``max_nodes`` nodes."""
    from . import gen

    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    report = ConfluenceReport(max_nodes)
    graph = RewriteGraph()
    for t in terms if terms is not None else gen.terms_up_to(max_nodes):
        report.term_count += 1
        nfs = graph.explore(t)
        if len(nfs) != 1:
            report.counterexamples.append({"term": str(t), "normal_forms": sorted(map(str, nfs))})
        if graph.longest[t] == 0:
            report.normal_count += 1
        report.max_path_length = max(report.max_path_length, graph.longest[t])
    report.edge_count = graph.edges
    report.measure_violations = graph.violations
    return report


# Critical overlaps of the rule set, with metavariables as free slots.
CRITICAL_OVERLAPS = (
    "P(@1,P(@2,D))",
    "P(@1,P(D,@2))",
    "P(D,P(@1,@2))",
    "P(@1,P(@2,P(@3,@4)))",
    "P(D,D)",
    "P(@1,P(D,D))",
    "P(D,P(D,@1))",
)


def critical_pairs() -> list[tuple[str, list[str], bool]]:
    """For each overlap: one-step reducts, and whether they all join."""
    from .terms import parse

    out = []
    for text in CRITICAL_OVERLAPS:
        t = parse(text, check=False)
        reducts = successors(t)
        joins = {normal_form(r) for r in reducts}
        out.append((text, [str(r) for r in reducts], len(joins) == 1))
    return out


__all__ = [
    "Rule", "Position", "find_redexes", "is_normal", "apply_rule", "normalize",
    "normal_form", "measure", "RewriteTrace", "RewriteStep", "check_confluence",
    "ConfluenceReport", "critical_pairs", "DISC", "NotARedex",
]
