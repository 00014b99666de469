"""Shared fixture lists and mutation generators for the tests."""

from __future__ import annotations

import random

from graycat.core import TABLE_FIELDS, copy_category
from graycat.fixtures import FIXTURES, fixture

ALL = list(FIXTURES)
ONE_OBJECT = [n for n in ALL if fixture(n).n0 == 1]
# categories small enough for exhaustive transfor sweeps between them
SMALL = ["terminal", "discrete2", "walking_arrow", "walking_2cell", "walking_z2_3cell",
         "bz2", "strict_z3", "strict_leftzero", "braided_z2"]

RESULT_DIM = {"id1": 1, "comp1": 1, "id2": 2, "vcomp2": 2, "whisk2L": 2, "whisk2R": 2,
              "id3": 3, "vcomp3": 3, "hcomp3": 3, "whisk3L": 3, "whisk3R": 3,
              "interchanger": 3, "inverses3": 3}


def table_mutations(g):
    """Every single-entry change of g: (field, key, new value)."""
    out = []
    for fld in TABLE_FIELDS:
        tab = getattr(g, fld)
        keys = sorted(tab) if isinstance(tab, dict) else range(len(tab))
        for k in keys:
            for v in g.cells(RESULT_DIM[fld]):
                if v != tab[k]:
                    out.append((fld, k, v))
    return out


def mutate(g, fld, k, v):
    m = copy_category(g)
    getattr(m, fld)[k] = v
    return m


def mutation_sample(n_per_fixture: int, seed: int = 0):
    rng = random.Random(seed)
    for name in ALL:
        g = fixture(name)
        muts = table_mutations(g)
        for mu in rng.sample(muts, min(n_per_fixture, len(muts))):
            yield name, mu
