"""Census of powerful sets by order, with the rank-(n-1) counting comparisons.

Usage:
    python scripts/census_table.py [--max-order 5]

Columns: total, counts by rank, linear/nonlinear split, and three counts to
compare against the previous order's total: all rank-(n-1) sets, those with
the last element a star, and rank-(n-1) isomorphism classes.
"""

from __future__ import annotations

import argparse

from powerful.core import is_isomorphic
from powerful.enumeration import census, enumerate_powerful


def iso_classes(systems) -> int:
    reps = []
    for s in systems:
        if not any(len(r) == len(s) and is_isomorphic(s, r) for r in reps):
            reps.append(s)
    return len(reps)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=5)
    ap.add_argument("--no-classes", action="store_true", help="skip isomorphism-class counts")
    args = ap.parse_args()

    prev_total = prev_classes = None
    print(f"{'n':>2} {'total':>6} {'linear':>6} {'nonlin':>6}  {'r=n-1':>6} {'star@n':>6} {'cls':>4} {'prev':>5} {'prevcls':>7}  by_rank")
    for n in range(args.max_order + 1):
        rep = census(n)
        deficient = rep.by_rank.get(n - 1, 0) if n else 0
        classes = None
        if not args.no_classes:
            classes = iso_classes(list(enumerate_powerful(n, rank=n - 1))) if n else 0
        all_classes = None if args.no_classes else iso_classes(list(enumerate_powerful(n)))
        print(f"{n:>2} {rep.total:>6} {rep.linear_count:>6} {rep.nonlinear_count:>6}  {deficient:>6} "
              f"{rep.star_at_last_count:>6} {classes if classes is not None else '-':>4} "
              f"{prev_total if prev_total is not None else '-':>5} {prev_classes if prev_classes is not None else '-':>7}  "
              + " ".join(f"{k}:{v}" for k, v in sorted(rep.by_rank.items())))
        prev_total, prev_classes = rep.total, all_classes


if __name__ == "__main__":
    main()
