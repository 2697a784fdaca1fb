"""Named property suites with seeds, bounds and JSON reports.

Each suite takes a ``SuiteConfig`` and returns a ``SuiteReport``.  A suite is
deterministic given its config: the same seed and bounds visit the same cases
in the same order, so every recorded witness replays.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import cobordism as S
from . import gen, perms, rewrite, terms
from .operad import OperadElement, gamma_bar, sigma_act, unit

SCHEMA = "surfcalc.suite-report/1"
MAX_WITNESSES = 25


@dataclass
class SuiteConfig:
    seed: int = 0
    max_nodes: int | None = None
    count: int | None = None
    max_arity: int | None = None
    max_degree: int | None = None

    def pick(self, name: str, default: Any) -> Any:
        value = getattr(self, name)
        return default if value is None else value


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases: int = 0
    failure_count: int = 0
    failures: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def check(self, ok: bool, check: str, **witness: Any) -> bool:
        """Count one case; keep a witness when it fails."""
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append({"check": check, **{k: _plain(v) for k, v in witness.items()}})
        return ok

    def bump(self, key: str, n: int = 1) -> None:
        self.stats[key] = self.stats.get(key, 0) + n

    def to_json(self) -> dict:
        out = asdict(self)
        out["schema"] = SCHEMA
        out["ok"] = self.ok
        out["wall_time"] = round(self.wall_time, 3)
        return out

    def summary(self) -> str:
        status = "ok" if self.ok else f"{self.failure_count} FAILURES"
        return f"{self.suite}: {self.cases} cases, {status} ({self.wall_time:.1f}s)"


def _plain(v: Any) -> Any:
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return str(v)


SUITES: dict[str, Callable[[SuiteConfig, SuiteReport], None]] = {}


def suite(name: str):
    def register(fn):
        SUITES[name] = fn
        return fn
    return register


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteReport:
    cfg = cfg or SuiteConfig()
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    rep = SuiteReport(name, {k: v for k, v in asdict(cfg).items() if v is not None})
    start = time.perf_counter()
    SUITES[name](cfg, rep)
    rep.wall_time = time.perf_counter() - start
    return rep


def run_all(cfg: SuiteConfig | None = None) -> list[SuiteReport]:
    return [run_suite(name, cfg) for name in SUITES]


# -- rewriting ---------------------------------------------------------------------


@suite("confluence")
def confluence_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Every rewrite path of every term with at most ``max_nodes`` nodes ends in one normal form."""
    n = cfg.pick("max_nodes", 9)
    res = rewrite.check_confluence(n)
    rep.stats.update(terms=res.term_count, normal=res.normal_count, edges=res.edge_count,
                     longest_path=res.max_path_length)
    rep.cases = res.term_count
    for c in res.counterexamples:
        rep.failure_count += 1
        rep.failures.append({"check": "unique normal form", **c})
    for a, b in res.measure_violations:
        rep.failure_count += 1
        rep.failures.append({"check": "measure decreases", "term": a, "successor": b})
    for text, reducts, joined in rewrite.critical_pairs():
        rep.check(joined, "critical pair joins", term=text, reducts=reducts)


@suite("termination")
def termination_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Random rewrite paths; every single step must decrease the measure."""
    steps = cfg.pick("count", 100_000)
    max_nodes = cfg.pick("max_nodes", 30)
    rng = random.Random(cfg.seed)
    done = paths = 0
    while done < steps:
        t = terms.as_whole(gen.random_term(rng, rng.randint(3, max_nodes)))
        paths += 1
        while True:
            redexes = rewrite.find_redexes(t)
            if not redexes:
                break
            pos, rule = rng.choice(redexes)
            nxt = rewrite.apply_rule(t, pos, rule)
            rep.check(rewrite.measure(nxt) < rewrite.measure(t), "measure decreases",
                      term=str(t), position=list(pos), rule=rule.value)
            done += 1
            t = nxt
    rep.stats.update(steps=done, paths=paths)


# -- operad ------------------------------------------------------------------------


def _elements(max_arity: int, max_genus: int) -> dict[tuple[int, int], list[OperadElement]]:
    return {(k, g): [OperadElement(t) for t in gen.normal_terms(k, g)]
            for k in range(max_arity + 1) for g in range(max_genus + 1)}


def _tuples(pool: dict, count: int, arity: int, genus: int):
    """Tuples of ``count`` elements with total arity ``arity`` and total genus at most ``genus``."""
    if count == 0:
        if arity == 0:
            yield ()
        return
    for a in range(arity + 1):
        for g in range(genus + 1):
            for e in pool.get((a, g), ()):
                for rest in _tuples(pool, count - 1, arity - a, genus - g):
                    yield (e,) + rest


def _split(xs, sizes):
    out, pos = [], 0
    for s in sizes:
        out.append(xs[pos:pos + s])
        pos += s
    return out


def check_associativity(rep: SuiteReport, F, Gs, Hs) -> None:
    lhs = gamma_bar(gamma_bar(F, Gs), Hs)
    blocks = _split(list(Hs), [G.arity for G in Gs])
    rhs = gamma_bar(F, [gamma_bar(G, b) for G, b in zip(Gs, blocks)])
    rep.check(lhs == rhs, "associativity", F=F, Gs=Gs, Hs=Hs)


def check_outer_equivariance(rep: SuiteReport, F, Gs, sigma) -> None:
    """Permuting the slots of ``F`` permutes the argument blocks."""
    permuted = [Gs[sigma[i] - 1] for i in range(len(sigma))]
    lhs = gamma_bar(sigma_act(F, sigma), Gs)
    rhs = sigma_act(gamma_bar(F, permuted), perms.block_permutation(sigma, [G.arity for G in permuted]))
    rep.check(lhs == rhs, "equivariance (outer)", F=F, Gs=Gs, sigma=sigma)


def check_inner_equivariance(rep: SuiteReport, F, Gs, taus, base=None) -> None:
    """Permuting inside an argument permutes inside its block."""
    base = base if base is not None else gamma_bar(F, Gs)
    lhs = gamma_bar(F, [sigma_act(G, t) for G, t in zip(Gs, taus)])
    rep.check(lhs == sigma_act(base, perms.direct_sum(*taus)), "equivariance (inner)", F=F, Gs=Gs, taus=taus)


def check_units(rep: SuiteReport, F) -> None:
    rep.check(gamma_bar(unit(), [F]) == F, "left unit", F=F)
    rep.check(gamma_bar(F, [unit()] * F.arity) == F, "right unit", F=F)


@suite("operad")
def operad_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Exhaustive laws for total arity <= ``max_arity`` and genus <= 2, then random larger cases."""
    total = cfg.pick("max_arity", 4)
    genus = 2
    pool = _elements(total, genus)
    for elems in pool.values():
        for F in elems:
            check_units(rep, F)
    rep.stats["unit elements"] = rep.cases
    for k in range(1, total + 1):
        for gF in range(genus + 1):
            for F in pool[(k, gF)]:
                for m in range(total - k + 1):
                    for Gs in _tuples(pool, k, m, genus - gF):
                        gG = sum(G.genus for G in Gs)
                        for h in range(total - k - m + 1):
                            for Hs in _tuples(pool, m, h, genus - gF - gG):
                                check_associativity(rep, F, Gs, Hs)
                        if k + m <= total:
                            for sigma in perms.all_perms(k):
                                check_outer_equivariance(rep, F, Gs, sigma)
                            base = gamma_bar(F, Gs)
                            for taus in itertools.product(*[list(perms.all_perms(G.arity)) for G in Gs]):
                                check_inner_equivariance(rep, F, Gs, list(taus), base)
    rep.stats["exhaustive cases"] = rep.cases
    rng = random.Random(cfg.seed)

    def rand(arity: int) -> OperadElement:
        return OperadElement.of(gen.random_term_with(rng, arity, rng.randint(0, 3), rng.randint(0, 2)))

    for _ in range(cfg.pick("count", 1000)):
        F = rand(rng.randint(2, 4))
        Gs = [rand(rng.randint(0, 3)) for _ in range(F.arity)]
        Hs = [rand(rng.randint(0, 2)) for _ in range(sum(G.arity for G in Gs))]
        check_associativity(rep, F, Gs, Hs)
        check_units(rep, F)
        sigma = perms.random_perm(F.arity, rng)
        taus = [perms.random_perm(G.arity, rng) for G in Gs]
        check_outer_equivariance(rep, F, Gs, sigma)
        check_inner_equivariance(rep, F, Gs, taus)
        genus_ok = gamma_bar(F, Gs).genus == F.genus + sum(G.genus for G in Gs)
        rep.check(genus_ok, "genus adds", F=F, Gs=Gs)


# -- cobordism category --------------------------------------------------------------


def _random_morphism(rng: random.Random, source: int, target: int) -> S.SMorphism:
    return S.random_morphism(rng, source, target, max_genus=2, extra=2)


def _random_target(rng: random.Random, source: int) -> int:
    return rng.randint(0 if source == 0 else 1, 3)


@suite("category")
def category_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Category, monoidal and symmetry laws of S, and the pants-loop identity."""
    rng = random.Random(cfg.seed)
    for _ in range(cfg.pick("count", 500)):
        n0 = rng.randint(0, 3)
        n1 = _random_target(rng, n0)
        n2 = _random_target(rng, n1)
        n3 = _random_target(rng, n2)
        f, g, h = (_random_morphism(rng, a, b) for a, b in ((n0, n1), (n1, n2), (n2, n3)))
        w = dict(f=str(f), g=str(g), h=str(h))
        rep.check(S.compose(S.compose(f, g), h) == S.compose(f, S.compose(g, h)), "associativity", **w)
        rep.check(S.compose(S.identity(n0), f) == f == S.compose(f, S.identity(n1)), "unit laws", **w)
        m0 = rng.randint(0, 2)
        m1 = _random_target(rng, m0)
        m2 = _random_target(rng, m1)
        f2, g2 = _random_morphism(rng, m0, m1), _random_morphism(rng, m1, m2)
        w.update(f2=str(f2), g2=str(g2))
        rep.check(S.compose(S.tensor(f, f2), S.tensor(g, g2)) == S.tensor(S.compose(f, g), S.compose(f2, g2)),
                  "interchange", **w)
        rep.check(S.tensor(S.tensor(f, f2), h) == S.tensor(f, S.tensor(f2, h)), "tensor associativity", **w)
        rep.check(S.tensor(S.identity(0), f) == f == S.tensor(f, S.identity(0)), "tensor unit", **w)
        rep.check(S.compose(S.tensor(f, f2), S.braiding(n1, m1)) == S.compose(S.braiding(n0, m0), S.tensor(f2, f)),
                  "symmetry natural", **w)
        rep.check(S.compose(S.braiding(n0, m0), S.braiding(m0, n0)) == S.identity(n0 + m0), "symmetry involutive", **w)
        F = _random_morphism(rng, 0, 1)
        rep.check(S.pants_loop_identity(F), "pants loop", F=str(F))


@suite("s-k-1")
def operad_iso_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Morphisms ``k -> 1`` are operad elements, and composition matches the operad maps."""
    rng = random.Random(cfg.seed)
    max_arity = cfg.pick("max_arity", 4)
    for _ in range(cfg.pick("count", 500)):
        k = rng.randint(0, max_arity)
        e = OperadElement.of(gen.random_term_with(rng, k, rng.randint(0, 2), rng.randint(0, 2)))
        rep.check(S.as_operad_element(S.from_operad_element(e)) == e, "element round trip", F=e)
        f = _random_morphism(rng, k, 1)
        rep.check(S.from_operad_element(S.as_operad_element(f)) == f, "morphism round trip", f=str(f))
        Gs = [OperadElement.of(gen.random_term_with(rng, rng.randint(0, 2), rng.randint(0, 1), 1))
              for _ in range(k)]
        via_s = S.compose(S.tensor_all([S.from_operad_element(G) for G in Gs]), S.from_operad_element(e))
        rep.check(S.as_operad_element(via_s) == gamma_bar(e, Gs), "composition is gamma", F=e, Gs=Gs)


# -- simplicial operators ----------------------------------------------------------------


def act_on_generic(word, p: int) -> tuple[int, ...]:
    """Apply a word to the generic simplex ``(0..p)`` of the standard simplex, letter by letter."""
    seq = tuple(range(p + 1))
    for kind, i in reversed(word):
        seq = seq[:i] + seq[i + 1:] if kind == "d" else seq[:i + 1] + seq[i:]
    return seq


@suite("operators")
def operators_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Canonical forms act like the word they came from, and are unique."""
    from .simplicial import operators as ops
    from .simplicial.sset import circle_model

    max_p = cfg.pick("max_degree", 6)
    max_len = cfg.pick("count", 5)
    for p in range(max_p + 1):
        seen: dict = {}  # delta map -> canonical word
        for length in range(max_len + 1):
            for w in ops.words(p, length):
                c = ops.canonical_word(w, p)
                key = act_on_generic(c, p)
                ok = ops.is_canonical(c) and key == act_on_generic(w, p)
                rep.check(ok, "canonical form acts like the word", p=p, word=ops.format_word(w))
                prev = seen.setdefault(key, tuple(c))
                if prev != tuple(c):
                    rep.check(False, "one canonical word per operator", p=p, word=ops.format_word(w))
        rep.bump("operators", len(seen))
    X = circle_model()
    for p in range(3):
        for length in range(4):
            for w in ops.words(p, length):
                op = ops.SimplicialOperator.from_word(w, p)
                ok = all(X.apply_word(w, s) == X.apply_operator(op, s) for s in X.simplices(p))
                rep.check(ok, "acts alike on the circle", p=p, word=ops.format_word(w))


# -- D and D~ ---------------------------------------------------------------------------------


@suite("vertices")
def vertices_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Degeneracy degree and vertices against the brute-force relation closure."""
    from .rectify import dcategory as D

    max_p = cfg.pick("max_degree", 4)
    length = cfg.pick("count", 4)
    res = D.check_against_closure(max_p, length)
    rep.stats.update(words=res.words, classes=res.classes, bases=res.checked_bases)
    rep.cases += res.words
    for kind, msgs in (("sound", res.unsound), ("separating", res.merged), ("vertex count", res.vertex_count_errors)):
        for m in msgs:
            rep.failure_count += 1
            if len(rep.failures) < MAX_WITNESSES:
                rep.failures.append({"check": kind, "detail": m})
    for p in range(max_p + 1):
        for q in range(max_p + 1):
            for g in D.morphisms_e_to_f(p, q):
                d = D.degeneracy_degree(g)
                words = D.vertices(g)
                rep.check(len(words) == d + 1, "d(g)+1 vertices", g=str(g))
                projected = {D.DMorphism.from_word(w, p) for w in words}
                rep.check(projected == {g}, "vertices project to g", g=str(g))
                keys = {tuple(w) for w in words}
                rep.check(len(keys) == len(words), "vertex words distinct", g=str(g))
                back = [D.canonical_vertex(w, p) for w in words]
                rep.check(back == [(g, k) for k in range(d + 1)], "vertex k reads back as k", g=str(g))


def _dtilde_points(rng: random.Random, g) -> list:
    from .rectify.dcategory import DTildeMorphism, degeneracy_degree

    d = degeneracy_degree(g)
    pts = [DTildeMorphism.vertex(g, k) for k in range(d + 1)]
    if d:
        pts.append(DTildeMorphism.barycenter(g))
        raw = [rng.randint(1, 9) for _ in range(d + 1)]
        pts.append(DTildeMorphism(g, tuple(Fraction(x, sum(raw)) for x in raw)))
    return pts


@suite("dtilde")
def dtilde_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Associativity of simplicially extended composition, and restriction to vertices."""
    from .rectify import dcategory as D
    from .rectify.dcategory import DMorphism, DTildeMorphism, compose_dtilde

    max_p = cfg.pick("max_degree", 4)
    rng = random.Random(cfg.seed)
    objs = [(k, p) for k in "EF" for p in range(max_p + 1)]
    out_gens = {o: [g for g in D.generators(o) if g.target[1] <= max_p] for o in objs}
    f_gen = {("E", p): DMorphism(("E", p), ("F", p), D.SimplicialOperator.identity(p)) for p in range(max_p + 1)}

    def out_of(o):
        extra = [f_gen[o]] if o in f_gen else []
        return out_gens[o] + extra

    # triples of generators (including f), each composite taken both ways
    for o in objs:
        for a in out_of(o):
            for b in out_of(a.target):
                if a.has_f and b.has_f:
                    continue
                for c in out_of(b.target):
                    if c.has_f and (a.has_f or b.has_f):
                        continue
                    lhs = compose_dtilde(c, compose_dtilde(b, a))
                    rhs = compose_dtilde(compose_dtilde(c, b), a)
                    rep.check(lhs == rhs, "associativity on generators", word=f"{c} | {b} | {a}")
    rep.stats["generator cases"] = rep.cases
    # triples through a point of a simplex, with generators around it
    for p in range(max_p + 1):
        for q in range(max_p + 1):
            for g in D.morphisms_e_to_f(p, q):
                for T in _dtilde_points(rng, g):
                    befores = _into(D, ("E", p), max_p)
                    afters = out_gens[("F", q)]
                    for b in befores:
                        for a in afters:
                            lhs = compose_dtilde(a, compose_dtilde(T, b))
                            rhs = compose_dtilde(compose_dtilde(a, T), b)
                            rep.check(lhs == rhs, "associativity through a simplex", a=str(a), T=str(T), b=str(b))
                            rep.check(sum(lhs.point) == 1 and min(lhs.point) >= 0, "barycentric", T=str(T))
                        for b2 in _into(D, b.source, max_p):
                            lhs = compose_dtilde(T, compose_dtilde(b, b2))
                            rhs = compose_dtilde(compose_dtilde(T, b), b2)
                            rep.check(lhs == rhs, "associativity through a simplex", T=str(T), b=str(b), b2=str(b2))
                    for a in afters:
                        for a2 in out_gens[a.target]:
                            lhs = compose_dtilde(a2, compose_dtilde(a, T))
                            rhs = compose_dtilde(compose_dtilde(a2, a), T)
                            rep.check(lhs == rhs, "associativity through a simplex", a2=str(a2), a=str(a), T=str(T))
                    if T.point.count(Fraction(1)) == 1 and T.point.count(Fraction(0)) == len(T.point) - 1:
                        k = T.dim - T.point.index(Fraction(1))
                        for a in afters:
                            got = compose_dtilde(a, T)
                            base, j = D.canonical_vertex(list(a.op.word) + D.vertex_word(g, k), p)
                            rep.check(got == DTildeMorphism.vertex(base, j), "vertex restriction (left)",
                                      a=str(a), g=str(g), k=k)
                        for b in _into(D, ("E", p), max_p):
                            got = compose_dtilde(T, b)
                            base, j = D.canonical_vertex(D.vertex_word(g, k) + list(b.op.word), b.source[1])
                            rep.check(got == DTildeMorphism.vertex(base, j), "vertex restriction (right)",
                                      b=str(b), g=str(g), k=k)


def _into(D, obj, max_p: int) -> list:
    """Generators landing in ``obj`` from objects of degree ``<= max_p``."""
    kind, p = obj
    out = []
    for src in ((kind, p - 1), (kind, p + 1)):
        if 0 <= src[1] <= max_p:
            out += [g for g in D.generators(src) if g.target == obj]
    return out


# -- levels ------------------------------------------------------------------------------------


@suite("levels")
def levels_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Both coherence equations for generated level decompositions."""
    from .rectify import levels as L

    rng = random.Random(cfg.seed)
    max_depth = cfg.pick("max_degree", 3)
    max_arity = cfg.pick("max_arity", 3)
    for n in range(cfg.pick("count", 500)):
        dec = L.random_decomposition(rng, n % (max_depth + 1), max_arity)
        bad = L.coherence_failures(dec)
        rep.check(not bad, "coherence", counts=dec.counts(), mterm=str(dec.to_mterm()) if dec.depth else "",
                  problems=bad)
        if dec.depth:
            m = dec.to_mterm()
            rep.check(L.LevelDecomposition.from_mterm(m, dec.depth).to_mterm() == m, "level read-off round trip",
                      mterm=str(m))
    # every single-level decomposition over small surfaces
    closed = [OperadElement.of(t) for t in ("D", "T(D)")]
    for k in range(3):
        for g in range(2):
            for top in (OperadElement(t) for t in gen.normal_terms(k, g)):
                for pairs in itertools.product(itertools.product(closed, repeat=2), repeat=k):
                    dec = L.LevelDecomposition(((top,),), tuple(pairs))
                    bad = L.coherence_failures(dec)
                    rep.check(not bad, "coherence (exhaustive depth 1)", top=top, problems=bad)


# -- bar construction ----------------------------------------------------------------------------


@suite("bar")
def bar_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """d o i = id and May's homotopy on the built-in test categories."""
    from .rectify import bar as B

    max_q = cfg.pick("max_degree", 2)
    for case in B.bar_cases():
        for r in (0, 1):
            rep.check(not B.category_failures(case.category, r), "category axioms", category=case.name, r=r)
            for y in case.objects:
                X = B.BarConstruction(case.category, case.functor, y, r)
                P = B.BarConstruction(case.category, case.functor, y, r, projected=True)
                tag = dict(category=case.name, object=str(y), r=r)
                for a in case.functor.values(y, r):
                    rep.check(X.evaluation(X.inclusion(a)) == a, "d o i = id", element=str(a), **tag)
                hrep = X.check_homotopy(max_q)
                rep.bump("homotopy identities", hrep.checked)
                rep.check(hrep.ok, "simplicial homotopy", witness=hrep.witness, **tag)
                cf = all(X.homotopy(j, x) == X.homotopy_closed_form(j, x)
                         for q in range(max_q + 1) for x in X.simplices(q) for j in range(q + 1))
                rep.check(cf, "homotopy closed form", **tag)
                rep.check(not B.simplicial_identity_failures(X, X.simplices, max_q), "simplicial identities", **tag)
                rep.check(not B.simplicial_identity_failures(P, P.simplices, max_q), "simplicial identities (projected)",
                          **tag)
                rep.check(not B.internal_compatibility_failures(X, min(max_q, 1)), "internal direction", **tag)
                cmp_ok = all(B.comparison(X, X.face(x, i)) == P.face(B.comparison(X, x), i)
                             for q in range(1, max_q + 1) for x in X.simplices(q) for i in range(q + 1))
                rep.check(cmp_ok, "comparison map is simplicial", **tag)
                counts = [sum(1 for _ in X.simplices(q)) for q in range(max_q + 1)]
                rep.check(counts == [X.count(q) for q in range(max_q + 1)], "enumeration matches count", **tag)
                if case.name == "interval":
                    got = [P.count(q) for q in range(max_q + 1)]
                    want = [B.interval_count(y, q, r) for q in range(max_q + 1)]
                    rep.check(got == want, "interval closed form", got=got, want=want, **tag)


# -- Barratt-Eccles, phi and simplicial sets -----------------------------------------------------


def _merge_laws(rep: SuiteReport, laws) -> None:
    for law, n in laws.checked.items():
        rep.cases += n
        rep.bump(law, n)
    for f in laws.failures:
        rep.failure_count += 1
        if len(rep.failures) < MAX_WITNESSES:
            rep.failures.append({"check": f["law"], "witness": f["witness"]})


@suite("gamma")
def gamma_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Monad laws of the truncated Barratt-Eccles monad and the assembly map."""
    from .simplicial import barratt_eccles as BE
    from .simplicial.sset import circle_model, sphere0

    max_arity = cfg.pick("max_arity", 2)
    max_degree = cfg.pick("max_degree", 1)
    _merge_laws(rep, BE.monad_law_audit(sphere0(), max_arity, max_degree))
    _merge_laws(rep, BE.monad_law_audit(circle_model(), max_arity, 0))
    if max_degree >= 1:
        _merge_laws(rep, BE.monad_law_audit(circle_model(), max_arity, max_degree, assoc_sample=20_000, seed=cfg.seed))
    _merge_laws(rep, BE.assembly_audit(cfg.pick("count", 100), seed=cfg.seed))


@suite("phi")
def phi_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Bisimpliciality of phi~ and the almost-simplicial identities of f_p."""
    from .simplicial import bisimplicial as bi

    max_p = cfg.pick("max_degree", 3)
    closed = [OperadElement.of(t) for t in ("D", "T(D)", "P(T(D),T(D))")]
    pairs = list(itertools.product(closed, repeat=2))
    for q in range(3):
        for seq in itertools.product(pairs, repeat=q + 1):
            bad = bi.bisimpliciality_audit(list(seq), max_p)
            rep.check(not bad, "phi~ bisimplicial", pairs=[f"({F},{G})" for F, G in seq], problems=bad[:3])
    res = bi.almost_simplicial_audit(max_p=max_p, count=cfg.pick("count", 30), seed=cfg.seed,
                                     max_arity=cfg.pick("max_arity", 2))
    rep.cases += res.checked
    rep.bump("almost-simplicial identities", res.checked)
    for f in res.failures:
        rep.failure_count += 1
        if len(rep.failures) < MAX_WITNESSES:
            rep.failures.append({"check": "almost simplicial", **_plain(f)})


@suite("sset")
def sset_suite(cfg: SuiteConfig, rep: SuiteReport) -> None:
    """Simplicial identities of the built-in simplicial sets, nerves and E Sigma_k."""
    from .simplicial import barratt_eccles as BE
    from .simplicial import nerve as N
    from .simplicial import sset as SS

    C = SS.circle_model()
    spaces = {
        "circle": (C, 4), "S0": (SS.sphere0(), 3), "delta2": (SS.standard_simplex(2), 4),
        "boundary": (SS.boundary_circle(), 3), "S1^S1": (SS.smash(C, C), 3),
        "S1xS0": (SS.product(C, SS.sphere0()), 3), "nerve[2]": (N.nerve(N.linear_order(2)), 4),
        "E Sigma_2": (BE.e_sigma(2, 3), 3),
    }
    for name, (X, deg) in spaces.items():
        bad = X.audit(deg)
        rep.check(not bad, "simplicial identities", space=name, problems=bad[:3])
    for k, deg in ((2, 3), (3, 2)):
        res = BE.freeness_audit(k, deg)
        rep.check(all(v["free"] for v in res.values()), "Sigma_k acts freely", k=k, orbits=res)
    for name, (X, a, d) in {"Gamma(S0)": (SS.sphere0(), 2, 2), "Gamma(S1)": (C, 2, 1)}.items():
        Y, _ = BE.gamma_monad(X, a, d)
        bad = Y.audit(d)
        rep.check(not bad, "simplicial identities", space=name, problems=bad[:3])
    maps = SS.enumerate_maps(C, C)
    rep.check(len(maps) == 5 and all(not m.problems() for m in maps), "pointed self-maps of the circle",
              found=len(maps))


__all__ = ["SuiteConfig", "SuiteReport", "SUITES", "run_suite", "run_all", "SCHEMA", "act_on_generic"]
