"""Validator completeness: every single-entry mutation of each fixture.

A mutant must either be rejected by the validator or be a Gray-category
according to the brute-force oracle in tests/oracle.py.

    python3 scripts/mutation_sweep.py [fixture ...] [--limit N]
"""

import argparse
import os
import random
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from graycat.core import validate_gray_category  # noqa: E402
from graycat.fixtures import FIXTURES, fixture  # noqa: E402
from helpers import mutate, table_mutations  # noqa: E402
from oracle import naive_is_gray  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("fixtures", nargs="*", default=[n for n in FIXTURES if n != "terminal"])
    ap.add_argument("--limit", type=int, default=None, help="sample at most N mutations per fixture")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    missed_total = 0
    for name in args.fixtures:
        g = fixture(name)
        muts = table_mutations(g)
        if args.limit and len(muts) > args.limit:
            muts = random.Random(args.seed).sample(muts, args.limit)
        t = time.time()
        detected = valid = missed = 0
        for fld, k, v in muts:
            m = mutate(g, fld, k, v)
            if not validate_gray_category(m).ok:
                detected += 1
            elif naive_is_gray(m):
                valid += 1
                print(f"  valid mutant: {name} {fld}{k} -> {v}")
            else:
                missed += 1
                print(f"  MISSED: {name} {fld}{k} -> {v}")
        missed_total += missed
        print(f"{name}: {len(muts)} mutations, detected {detected}, valid {valid}, missed {missed} "
              f"({time.time() - t:.1f}s)", flush=True)
    raise SystemExit(1 if missed_total else 0)


if __name__ == "__main__":
    main()
