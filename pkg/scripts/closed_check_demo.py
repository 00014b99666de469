"""Closed-structure checks on a few quadruples, faithful and normalized.

    python3 scripts/closed_check_demo.py
"""

import time

from graycat.closed import HomBuildConfig, check_closed_axioms
from graycat.core import ONE
from graycat.fixtures import fixture

RUNS = [
    (("terminal", "bz2", "strict_leftzero", "walking_z2_3cell"), (2, 4, 6, 8)),
    (("terminal", "walking_arrow", "bz2", "strict_leftzero"), (8, 64, 600, 6000)),
    (("terminal", "terminal", "bz2", "braided_z2"), (4, 64, 600, 6000)),
]


def main():
    for names, caps in RUNS:
        cats = [ONE if n == "terminal" else fixture(n) for n in names]
        for norm in (False, True):
            t = time.time()
            s = check_closed_axioms(*cats, HomBuildConfig("ssg", caps, normalized_adjoints=norm))
            laws = sorted({v.law for v in s.report.violations})
            print(f"{names} normalized={norm}: {s.report.total} violations {laws} "
                  f"({time.time() - t:.1f}s)")
            for k, v in s.counts.items():
                print(f"    {k} {v}")
            print("    checked " + " ".join(f"{k}={v}" for k, v in s.checked.items()))


if __name__ == "__main__":
    main()
