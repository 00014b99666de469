"""Print each fixture's size, validity and a few transfor counts."""

from graycat.core import ONE, validate_gray_category
from graycat.fixtures import FIXTURES, fixture
from graycat.search import enumerate_functors, enumerate_trinats
from graycat.transfors import identity_functor


def main():
    print(f"{'fixture':<20} {'cells':<18} {'valid':<6} {'objects of 1->A':<16} semi-strict on 1_A")
    for name in FIXTURES:
        g = fixture(name)
        ok = validate_gray_category(g).ok
        pts = len(enumerate_functors(ONE, g))
        S = identity_functor(g)
        ss = len(enumerate_trinats(S, S, "semi-strict", limit=None))
        print(f"{name:<20} {str(g.counts()):<18} {str(ok):<6} {pts:<16} {ss}")


if __name__ == "__main__":
    main()
