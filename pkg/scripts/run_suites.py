"""Run every property suite at default bounds and write one JSON report.

    python scripts/run_suites.py --seed 0 --out results/suites.json
"""

import argparse
import json
from pathlib import Path

from surfcalc.suites import SCHEMA, SUITES, SuiteConfig, run_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", nargs="*", choices=sorted(SUITES), help="subset of suites")
    ap.add_argument("--out", type=Path, default=Path("results/suites.json"))
    args = ap.parse_args()

    reports = []
    for name in args.only or SUITES:
        rep = run_suite(name, SuiteConfig(seed=args.seed))
        print(rep.summary(), flush=True)
        reports.append(rep.to_json())
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps({"schema": SCHEMA, "reports": reports}, indent=2))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
