"""Tabulate simplex counts of the bar construction for the built-in categories."""

import argparse

from surfcalc.rectify import bar as B


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=2)
    ap.add_argument("--internal", type=int, nargs="*", default=[0, 1])
    args = ap.parse_args()

    degrees = range(args.max_degree + 1)
    for case in B.bar_cases():
        for r in args.internal:
            for y in case.objects:
                X = B.BarConstruction(case.category, case.functor, y, r)
                P = B.BarConstruction(case.category, case.functor, y, r, projected=True)
                print(f"{case.name:>14} r={r} y={str(y):<10} "
                      f"full {[X.count(q) for q in degrees]}  projected {[P.count(q) for q in degrees]}")


if __name__ == "__main__":
    main()
