"""Count normal forms by (arity, genus), two ways.

Brute force normalizes every term with at most N nodes; the direct generator
lists redex-free shapes.  Counts agree for every (arity, genus) whose largest
normal form fits in N nodes.
"""

import argparse
from collections import Counter

from surfcalc import gen, rewrite, terms


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-nodes", type=int, default=9)
    args = ap.parse_args()

    found: dict = {}
    for t in gen.terms_up_to(args.max_nodes):
        nf = rewrite.normal_form(t)
        found.setdefault((terms.free_count(nf), terms.genus(nf)), set()).add(nf)
    largest = Counter()
    print(f"{'arity':>5} {'genus':>5} {'brute':>7} {'direct':>7}  largest normal form")
    for key in sorted(found):
        direct = list(gen.normal_terms(*key))
        largest[key] = max(terms.size(t) for t in direct)
        fits = largest[key] <= args.max_nodes
        mark = "" if not fits else ("ok" if set(direct) == found[key] else "MISMATCH")
        print(f"{key[0]:>5} {key[1]:>5} {len(found[key]):>7} {len(direct):>7}  {largest[key]:>3} nodes {mark}")


if __name__ == "__main__":
    main()
