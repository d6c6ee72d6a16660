"""Run every theorem check at every order it supports and print a timing table.

Usage:
    python scripts/verify_all.py [--max-order N]
"""

import argparse
import sys

from powerful.verify import THEOREMS, verify_theorem


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=5)
    args = ap.parse_args()
    failed = False
    for tid, (_, cap) in THEOREMS.items():
        for n in range(min(cap, args.max_order) + 1):
            rep = verify_theorem(n, tid)
            failed |= not rep.ok
            print(f"{rep.summary():<60} {rep.runtime:7.3f}s")
            for c in rep.counterexamples[:5]:
                print("   ", c)
    sys.exit(2 if failed else 0)


if __name__ == "__main__":
    main()
