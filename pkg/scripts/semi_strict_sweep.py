"""Exhaustive semi-strict composition sweep.

For every composable pair (q, p) of semi-strict trinats between endofunctors
of a fixture, check that q p is unital and that its compositor at (g, f) is
the identity exactly when the interchanger of p_f with q_g is.

    python3 scripts/semi_strict_sweep.py [fixture ...]

With no arguments every fixture is swept, graded_braided_z3 included
(about 2M pairs, a quarter of an hour).
"""

import argparse
import time
from itertools import product

from graycat.calculus import compose_trinat
from graycat.fixtures import FIXTURES, fixture
from graycat.search import enumerate_functors, enumerate_trinats
from graycat.transfors import classify_strictness


def sweep(name, progress=100_000):
    g = fixture(name)
    Fs = enumerate_functors(g, g)
    ss = {pair: enumerate_trinats(*pair, "semi-strict", limit=None) for pair in product(Fs, repeat=2)}
    pairs = nonunital = mismatch = noncomp = 0
    t = time.time()
    for F, G, H in product(Fs, repeat=3):
        for q, p in product(ss[G, H], ss[F, G]):
            qp = compose_trinat(q, p)
            cls = classify_strictness(qp)
            nonunital += not cls.unital
            noncomp += not cls.compositional
            for k, (gg, ff) in enumerate(g.composable_pairs):
                crit = g.is_identity(3, g.ich(p.adj[ff].left, q.adj[gg].left))
                mismatch += g.is_identity(3, qp.compositor[k]) != crit
            pairs += 1
            if progress and pairs % progress == 0:
                print(f"  {name}: {pairs} pairs, {time.time() - t:.0f}s", flush=True)
    return pairs, nonunital, noncomp, mismatch


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("fixtures", nargs="*", default=list(FIXTURES))
    args = ap.parse_args()
    bad = 0
    for name in args.fixtures:
        t = time.time()
        pairs, nonunital, noncomp, mismatch = sweep(name)
        bad += nonunital + mismatch
        print(f"{name}: {pairs} pairs, non-unital {nonunital}, non-compositional {noncomp}, "
              f"criterion mismatches {mismatch} ({time.time() - t:.1f}s)", flush=True)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
