"""Regenerate the golden text files for the fixture corpus.

    python3 scripts/make_golden.py [outdir]

One-object fixtures are also written as Gray-monoid files.
"""

import sys
from pathlib import Path

from graycat.centre import unsuspend
from graycat.fileformat import print_category, print_monoid
from graycat.fixtures import FIXTURES, fixture


def main(out: Path):
    out.mkdir(parents=True, exist_ok=True)
    for name in FIXTURES:
        g = fixture(name)
        (out / f"{name}.graycat").write_text(print_category(g))
        if g.n0 == 1:
            (out / f"{name}.graymonoid").write_text(print_monoid(unsuspend(g)))
        print(name, g.counts())


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "tests" / "golden")
