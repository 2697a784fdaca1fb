"""Exhaustive monad laws of the truncated Barratt-Eccles monad on S^0 and S^1.

Every element of Gamma^3(X) with arity <= A at each level and degree <= R is
visited.  On the circle with A = 2, R = 1 that is about 1.6 million
associativity instances and takes under two minutes.
"""

import argparse
import json
import time
from pathlib import Path

from surfcalc.simplicial import barratt_eccles as BE
from surfcalc.simplicial.sset import circle_model, sphere0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-arity", type=int, default=2)
    ap.add_argument("--max-degree", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results/gamma_associativity.json"))
    args = ap.parse_args()

    rows = {}
    for name, X in (("S0", sphere0()), ("S1", circle_model())):
        start = time.perf_counter()
        rep = BE.monad_law_audit(X, args.max_arity, args.max_degree)
        rows[name] = {"checked": rep.checked, "failures": rep.failures, "seconds": round(time.perf_counter() - start, 1)}
        print(f"{name}: {sum(rep.checked.values())} instances, {len(rep.failures)} failures, "
              f"{rows[name]['seconds']}s  {rep.checked}", flush=True)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps({"max_arity": args.max_arity, "max_degree": args.max_degree, "spaces": rows},
                                   indent=2))


if __name__ == "__main__":
    main()
