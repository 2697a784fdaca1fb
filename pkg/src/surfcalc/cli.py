"""Command-line front end: ``surfcalc <command> ...``.

Exit status is 0 on success, 1 when a check or suite finds failures and 2 on
usage errors (bad arguments, unparsable input).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import cobordism as S
from . import rewrite, terms
from .operad import OperadElement, gamma_bar
from .suites import SCHEMA, SUITES, SuiteConfig, run_suite


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _element(text: str) -> OperadElement:
    return OperadElement.of(terms.parse(text))


def _morphism(text: str) -> S.SMorphism:
    """``[c1; c2] : n -> m``, or a bare term read as a morphism ``k -> 1``."""
    if "->" in text:
        return S.parse_morphism(text)
    return S.from_operad_element(_element(text))


# -- commands ---------------------------------------------------------------------


def cmd_normalize(args) -> int:
    t = terms.parse(args.term)
    nf, trace = rewrite.normalize(t, strategy=args.strategy)
    payload = {"input": args.term, "normal_form": str(nf), "steps": len(trace.steps)}
    lines = [str(nf)]
    if args.trace:
        payload["trace"] = trace.to_json()["steps"]
        lines = [f"{str(trace.source)}"]
        for st in trace.steps:
            lines.append(f"  {st.rule.value} at {list(st.position)} -> {st.result}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_compose(args) -> int:
    F = _element(args.outer)
    Gs = [_element(g) for g in args.args]
    out = gamma_bar(F, Gs)
    _emit(args, {"outer": str(F), "args": [str(g) for g in Gs], "result": str(out), "arity": out.arity,
                 "genus": out.genus}, str(out))
    return 0


def cmd_scompose(args) -> int:
    f, g = _morphism(args.first), _morphism(args.second)
    out = S.compose(f, g)
    _emit(args, {"first": f.to_json(), "second": g.to_json(), "result": out.to_json()}, str(out))
    return 0


def cmd_stensor(args) -> int:
    out = S.tensor_all([_morphism(m) for m in args.morphisms])
    _emit(args, {"result": out.to_json()}, str(out))
    return 0


def cmd_pants_loop(args) -> int:
    f = _morphism(args.surface)
    if (f.source, f.target) != (0, 1):
        raise UsageError("pants-loop-check needs a closed surface (a morphism 0 -> 1)")
    glued = S.glue_left_leg(f)
    capped = S.compose(S.disc(), glued)
    ok = capped == f
    _emit(args, {"surface": str(f), "glued": str(glued), "capped": str(capped), "holds": ok},
          f"{capped} {'==' if ok else '!='} {f}")
    return 0 if ok else 1


def _degree_for(args, word) -> int:
    from .rectify import dcategory as D
    return args.p if args.p is not None else D.minimal_degree(word)


def cmd_d_degree(args) -> int:
    from .rectify import dcategory as D

    p = _degree_for(args, args.word)
    g = D.DMorphism.from_word(args.word, p)
    d = D.degeneracy_degree(g)
    _emit(args, {"word": args.word, "p": p, "canonical": str(g), "degeneracy_degree": d}, str(d))
    return 0


def cmd_vertices(args) -> int:
    from .rectify import dcategory as D

    p = _degree_for(args, args.word)
    g = D.DMorphism.from_word(args.word, p)
    ws = [D.format_dword(w) for w in D.vertices(g)]
    _emit(args, {"word": args.word, "p": p, "canonical": str(g), "vertices": ws},
          "\n".join(f"{k}: {w}" for k, w in enumerate(ws)))
    return 0


def cmd_dtilde_compose(args) -> int:
    from .rectify import dcategory as D

    p = args.p if args.p is not None else D.minimal_degree(args.second.split("@")[0].split("#")[0])
    b = D.parse_dtilde(args.second, p, args.kind)
    a = D.parse_dtilde(args.first, b.target[1], b.target[0])
    out = D.compose_dtilde(a, b)
    _emit(args, {"first": a.to_json(), "second": b.to_json(), "result": out.to_json()}, str(out))
    return 0


def cmd_esigma(args) -> int:
    from .simplicial.barratt_eccles import e_sigma, freeness_audit

    deg = args.max_degree if args.max_degree is not None else 2
    X = e_sigma(args.k, deg)
    counts = [X.count(q) for q in range(deg + 1)]
    nondeg = [len(X.nondegenerate(q)) for q in range(deg + 1)]
    free = freeness_audit(args.k, deg)
    bad = X.audit(deg)
    _emit(args, {"k": args.k, "simplices": counts, "nondegenerate": nondeg, "freeness": free, "audit": bad},
          f"simplices {counts}, nondegenerate {nondeg}, free {all(v['free'] for v in free.values())}")
    return 1 if bad else 0


def _load_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}") from None


def _category(args):
    from .simplicial import nerve as N

    if args.category:
        return N.FiniteCategory.from_json(_load_json(args.category))
    if args.linear is not None:
        return N.linear_order(args.linear)
    raise UsageError("give --category FILE or --linear N")


def cmd_nerve(args) -> int:
    from .simplicial.nerve import nerve

    C = _category(args)
    X = nerve(C, args.max_degree)
    top = args.max_degree if args.max_degree is not None else X.max_dim
    nondeg = [len(X.nondegenerate(q)) for q in range(top + 1)]
    bad = X.audit(top)
    chi = sum((-1) ** q * n for q, n in enumerate(nondeg))
    _emit(args, {"category": C.name, "nondegenerate": nondeg, "euler_characteristic": chi, "audit": bad},
          f"nondegenerate simplices by degree: {nondeg}, euler characteristic {chi}")
    return 1 if bad else 0


_SPACES = ("circle", "s0", "boundary", "delta<n>", "smash-circle", "nerve<n>")


def _space(name: str):
    from .simplicial import nerve as N
    from .simplicial import sset as SS

    if name == "circle":
        return SS.circle_model()
    if name == "s0":
        return SS.sphere0()
    if name == "boundary":
        return SS.boundary_circle()
    if name == "smash-circle":
        return SS.smash(SS.circle_model(), SS.circle_model())
    if name.startswith("delta") and name[5:].isdigit():
        return SS.standard_simplex(int(name[5:]))
    if name.startswith("nerve") and name[5:].isdigit():
        return N.nerve(N.linear_order(int(name[5:])))
    path = Path(name)
    if path.suffix == ".json":
        return SS.FiniteSimplicialSet.from_json(_load_json(name))
    raise UsageError(f"unknown space {name!r}; use one of {', '.join(_SPACES)} or a .json file")


def cmd_audit(args) -> int:
    X = _space(args.space)
    deg = args.max_degree if args.max_degree is not None else max(X.max_dim + 1, 2)
    bad = X.audit(deg)
    counts = [X.count(q) for q in range(deg + 1)]
    _emit(args, {"space": X.name or args.space, "simplices": counts, "problems": bad},
          f"{X.name or args.space}: {len(bad)} problems up to degree {deg}; simplices {counts}"
          + "".join(f"\n  {b}" for b in bad[:10]))
    return 1 if bad else 0


def cmd_bar(args) -> int:
    from .rectify import bar as B

    if args.builtin:
        cases = {c.name: c for c in B.bar_cases()}
        if args.builtin not in cases:
            raise UsageError(f"unknown built-in category; choose from {', '.join(cases)}")
        case = cases[args.builtin]
        C, F, objects = case.category, case.functor, case.objects
    else:
        if not (args.category and args.functor):
            raise UsageError("bar needs --builtin NAME, or --category FILE with --functor FILE")
        from .simplicial.nerve import FiniteCategory
        C = B.DiscreteEnriched(FiniteCategory.from_json(_load_json(args.category)))
        F = B.TableFunctor.from_json(_load_json(args.functor), C.objects)
        missing = [o for o in C.objects if o not in F.objects]
        if missing:
            raise UsageError(f"the functor gives no values for {missing}")
        bad = B.functor_failures(C, F)
        if bad:
            raise UsageError("the functor is not a functor: " + "; ".join(bad[:3]))
        objects = list(C.objects)
    if args.object is not None:
        objects = [o for o in objects if str(o) == args.object]
        if not objects:
            raise UsageError(f"no object named {args.object!r}")
    q_max = args.max_degree if args.max_degree is not None else 2
    results, failed, lines = [], False, []
    for y in objects:
        X = B.BarConstruction(C, F, y, args.internal)
        P = B.BarConstruction(C, F, y, args.internal, projected=True)
        di = all(X.evaluation(X.inclusion(a)) == a for a in F.values(y, args.internal))
        hrep = X.check_homotopy(q_max)
        row = {"object": str(y), "counts": [X.count(q) for q in range(q_max + 1)],
               "projected_counts": [P.count(q) for q in range(q_max + 1)],
               "d_after_i_is_identity": di, "homotopy_checks": hrep.checked, "homotopy_ok": hrep.ok,
               "witness": hrep.witness}
        failed |= not (di and hrep.ok)
        results.append(row)
        lines.append(f"{y}: simplices {row['counts']}, projected {row['projected_counts']}, "
                     f"d o i = id: {di}, homotopy: {'ok' if hrep.ok else hrep.witness} ({hrep.checked} identities)")
    _emit(args, {"internal_degree": args.internal, "objects": results}, "\n".join(lines))
    return 1 if failed else 0


def cmd_check(args) -> int:
    cfg = SuiteConfig(seed=args.seed, max_nodes=args.max_nodes, count=args.count,
                      max_arity=args.max_arity, max_degree=args.max_degree)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    reports = []
    for name in names:
        rep = run_suite(name, cfg)
        reports.append(rep)
        if not args.json:
            print(rep.summary(), flush=True)
            for f in rep.failures[:5]:
                print(f"  {json.dumps(f, default=str)}")
    failed = any(not r.ok for r in reports)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "ok": not failed, "reports": [r.to_json() for r in reports]},
                         indent=2, default=str))
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-nodes", type=int)
    common.add_argument("--count", type=int)
    common.add_argument("--max-arity", type=int)
    common.add_argument("--max-degree", type=int)

    parser = argparse.ArgumentParser(prog="surfcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("normalize", cmd_normalize, "normal form of a surface term")
    sp.add_argument("term")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--strategy", choices=sorted(rewrite.STRATEGIES), default="leftmost-innermost")

    sp = add("compose", cmd_compose, "operad composition: ARGS glued into the slots of OUTER")
    sp.add_argument("--outer", required=True)
    sp.add_argument("--args", nargs="*", default=[])

    sp = add("scompose", cmd_scompose, "composite in S: SECOND after FIRST")
    sp.add_argument("first")
    sp.add_argument("second")

    sp = add("stensor", cmd_stensor, "disjoint union of morphisms of S")
    sp.add_argument("morphisms", nargs="+")

    sp = add("pants-loop-check", cmd_pants_loop, "cap the free leg of F glued into the pants")
    sp.add_argument("surface")

    for name, fn, help in (("d-degree", cmd_d_degree, "degeneracy degree of a word with one f"),
                           ("vertices", cmd_vertices, "vertex words of the simplex over a word")):
        sp = add(name, fn, help)
        sp.add_argument("word")
        sp.add_argument("-p", "--p", type=int, help="source degree (default: least valid)")

    sp = add("dtilde-compose", cmd_dtilde_compose, "FIRST after SECOND in D~, extended affinely")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("-p", "--p", type=int, help="source degree of SECOND (default: least valid)")
    sp.add_argument("--kind", choices=("E", "F"), default="E", help="source letter of SECOND")

    sp = add("esigma", cmd_esigma, "simplices of E Sigma_k and freeness of the action")
    sp.add_argument("k", type=int)

    sp = add("nerve", cmd_nerve, "nerve of a finite category")
    sp.add_argument("--category", help="category JSON file")
    sp.add_argument("--linear", type=int, help="use the linear order 0 < ... < N")

    sp = add("audit", cmd_audit, "check the simplicial identities of a finite simplicial set")
    sp.add_argument("space", help=f"one of {', '.join(_SPACES)} or a .json file")

    sp = add("bar", cmd_bar, "bar construction: d o i = id and May's homotopy")
    sp.add_argument("--category", help="category JSON file")
    sp.add_argument("--functor", help="functor JSON file")
    sp.add_argument("--builtin", help="a built-in test category")
    sp.add_argument("--object", help="restrict to one object")
    sp.add_argument("--internal", type=int, default=0, help="internal simplicial degree")

    sp = add("check", cmd_check, "run a named property suite")
    sp.add_argument("suite", help=f"all, {', '.join(SUITES)}")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, IndexError) as e:
        msg = e.args[0] if e.args else str(e)
        print(f"surfcalc {args.command}: {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
