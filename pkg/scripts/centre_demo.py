"""Centres of the Gray-monoid fixtures and their braid data.

    python3 scripts/centre_demo.py [monoid ...] [--sample K]
"""

import argparse
import time

from graycat.centre import CentreObject, centre, check_centre_correspondence, unsuspend
from graycat.fixtures import FIXTURES, fixture
from graycat.transfors import classify_strictness


def main():
    ones = [n for n in FIXTURES if fixture(n).n0 == 1]
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("monoids", nargs="*", default=ones)
    ap.add_argument("--sample", type=int, default=8, help="objects kept for graded_braided_z3")
    args = ap.parse_args()
    for name in args.monoids:
        t = time.time()
        m = unsuspend(fixture(name))
        Z = centre(m, sample=args.sample if name == "graded_braided_z3" else None)
        rep = check_centre_correspondence(m, Z)
        ss = sum(classify_strictness(X).semi_strict for X in Z.objects)
        print(f"{name}: {len(Z.objects)} objects ({ss} semi-strict), {len(Z.morphisms)} morphisms, "
              f"{len(Z.cells)} 2-cells; correspondence violations {rep.total} ({time.time() - t:.1f}s)")
        for X in Z.chosen[:3]:
            o = CentreObject.from_trinat(X)
            print(f"    X={o.X} braiding arrows {[a.left for a in o.braiding]}")


if __name__ == "__main__":
    main()
