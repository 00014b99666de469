"""Finite tabulated Gray-categories.

Cells of each dimension are numbered 0..n-1.  A 1-cell has objects as
boundary, a 2-cell has 1-cells, a 3-cell has 2-cells.  Composition conventions:

* ``c1(g, f)`` is g after f.
* ``v2(b, a)`` and ``v3(B, A)`` are vertical composites, ``a`` first.
* ``wl2(h, a)`` is h.a (a whiskered by h on the left, h applied after a),
  ``wr2(a, h)`` is a.h (h applied first).
* ``h3(B, A)`` is the horizontal composite inside a hom 2-category: for
  A: a => a' and B: b => b' with b after a it goes from ba to b'a'.
* ``ich(a, b)`` is the interchanger b_a for a: f => f' in hom(X, Y) and
  b: g => g' in hom(Y, Z).  It runs from (b.f')(g.a) to (g'.a)(b.f).

The same method names are implemented by the lazy transfor homs in
:mod:`graycat.calculus`, so everything downstream is written against this
small interface.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .report import ValidationReport


class CellLookupError(KeyError):
    pass


@dataclass(frozen=True, order=True)
class CellId:
    dimension: int
    index: int


@dataclass(eq=False)
class GrayCategory:
    name: str
    n0: int
    one: list            # 1-cell -> (source object, target object)
    two: list            # 2-cell -> (source 1-cell, target 1-cell)
    three: list          # 3-cell -> (source 2-cell, target 2-cell)
    id1: list
    comp1: dict
    id2: list
    vcomp2: dict
    whisk2L: dict
    whisk2R: dict
    id3: list
    vcomp3: dict
    hcomp3: dict
    whisk3L: dict
    whisk3R: dict
    interchanger: dict
    inverses3: dict = field(default_factory=dict)

    # -- sizes ---------------------------------------------------------
    def counts(self) -> tuple:
        return (self.n0, len(self.one), len(self.two), len(self.three))

    def cells(self, d: int) -> range:
        return range(self.counts()[d])

    # -- boundaries ----------------------------------------------------
    def src(self, d: int, c):
        return (self.one, self.two, self.three)[d - 1][c][0]

    def tgt(self, d: int, c):
        return (self.one, self.two, self.three)[d - 1][c][1]

    def ends(self, d: int, c) -> tuple:
        """Source and target objects of a cell of dimension >= 1."""
        while d > 1:
            c = self.src(d, c)
            d -= 1
        return self.one[c]

    # -- operations ----------------------------------------------------
    def _get(self, table, key):
        try:
            return table[key]
        except (KeyError, IndexError, TypeError):
            raise CellLookupError(key) from None

    def i1(self, x):
        return self._get(self.id1, x)

    def c1(self, g, f):
        return self._get(self.comp1, (g, f))

    def i2(self, f):
        return self._get(self.id2, f)

    def v2(self, b, a):
        return self._get(self.vcomp2, (b, a))

    def wl2(self, h, a):
        return self._get(self.whisk2L, (h, a))

    def wr2(self, a, h):
        return self._get(self.whisk2R, (a, h))

    def i3(self, a):
        return self._get(self.id3, a)

    def v3(self, B, A):
        return self._get(self.vcomp3, (B, A))

    def h3(self, B, A):
        return self._get(self.hcomp3, (B, A))

    def wl3(self, h, A):
        return self._get(self.whisk3L, (h, A))

    def wr3(self, A, h):
        return self._get(self.whisk3R, (A, h))

    def ich(self, a, b):
        return self._get(self.interchanger, (a, b))

    def inv3(self, A):
        return self._get(self.inverses3, A)

    def is_identity(self, d: int, c) -> bool:
        if d == 1:
            return c == self.id1[self.one[c][0]]
        if d == 2:
            return c == self.id2[self.two[c][0]]
        return c == self.id3[self.three[c][0]]

    # -- derived indexes -----------------------------------------------
    @cached_property
    def composable_pairs(self) -> list:
        return sorted(self.comp1)

    @cached_property
    def pair_index(self) -> dict:
        return {p: i for i, p in enumerate(self.composable_pairs)}

    @cached_property
    def ones_between(self) -> dict:
        out = {}
        for f, (x, y) in enumerate(self.one):
            out.setdefault((x, y), []).append(f)
        return out

    @cached_property
    def twos_between(self) -> dict:
        out = {}
        for a, st in enumerate(self.two):
            out.setdefault(st, []).append(a)
        return out

    @cached_property
    def threes_between(self) -> dict:
        out = {}
        for A, st in enumerate(self.three):
            out.setdefault(st, []).append(A)
        return out

    def hom_pairs(self) -> list:
        return [(x, y) for x in range(self.n0) for y in range(self.n0)]

    def hom(self, x: int, y: int) -> "Hom2Cat":
        return hom2cat(self, x, y)

    def __repr__(self) -> str:
        return f"GrayCategory({self.name!r}, counts={self.counts()})"


@dataclass(eq=False)
class Hom2Cat:
    """One hom 2-category of a GrayCategory, indexed by global cell ids."""

    objects: list
    arrows: dict         # 2-cell -> (source 1-cell, target 1-cell)
    twocells: dict       # 3-cell -> (source 2-cell, target 2-cell)
    vcomp2: dict
    id2: dict
    vcomp3: dict
    hcomp3: dict
    id3: dict
    inverses3: dict


def hom2cat(g: GrayCategory, x: int, y: int) -> Hom2Cat:
    objs = [f for f, st in enumerate(g.one) if st == (x, y)]
    oset = set(objs)
    arrows = {a: st for a, st in enumerate(g.two) if st[0] in oset}
    twocells = {A: st for A, st in enumerate(g.three) if st[0] in arrows}
    return Hom2Cat(
        objects=objs,
        arrows=arrows,
        twocells=twocells,
        vcomp2={k: v for k, v in g.vcomp2.items() if k[1] in arrows},
        id2={f: g.id2[f] for f in objs if f < len(g.id2)},
        vcomp3={k: v for k, v in g.vcomp3.items() if k[1] in twocells},
        hcomp3={k: v for k, v in g.hcomp3.items() if k[1] in twocells},
        id3={a: g.id3[a] for a in arrows if a < len(g.id3)},
        inverses3={k: v for k, v in g.inverses3.items() if k in twocells},
    )


# ---------------------------------------------------------------------------
# validators


def _exact_domain(report, law, table, expected, check_value):
    """Table must be defined exactly on ``expected`` with well-typed values."""
    keys = set(table)
    for k in sorted(expected - keys):
        report.structural(law + ".missing", (k,))
    for k in sorted(keys - expected, key=repr):
        report.structural(law + ".not-composable", (k,))
    for k in sorted(keys & expected):
        msg = check_value(k, table[k])
        if msg:
            report.structural(law + ".boundary", (k,), msg)


def validate_two_category(h: Hom2Cat, cap: int = 100) -> ValidationReport:
    r = ValidationReport(cap=cap)
    objs = set(h.objects)
    arrows, cells = h.arrows, h.twocells

    for a, (s, t) in sorted(arrows.items()):
        if s not in objs or t not in objs:
            r.structural("arrow.boundary", (a,))
    for A, (s, t) in sorted(cells.items()):
        if s not in arrows or t not in arrows:
            r.structural("twocell.boundary", (A,))
        elif arrows[s] != arrows[t]:
            r.structural("twocell.globular", (A,))
    if r.total:
        return r

    for o in sorted(objs):
        i = h.id2.get(o)
        if i is None:
            r.structural("id2.missing", (o,))
        elif arrows.get(i) != (o, o):
            r.structural("id2.boundary", (o,))
    for a in sorted(arrows):
        i = h.id3.get(a)
        if i is None:
            r.structural("id3.missing", (a,))
        elif cells.get(i) != (a, a):
            r.structural("id3.boundary", (a,))

    comp2 = {(b, a) for a in arrows for b in arrows if arrows[a][1] == arrows[b][0]}

    def chk_v2(k, v):
        b, a = k
        if arrows.get(v) != (arrows[a][0], arrows[b][1]):
            return f"value {v}"

    _exact_domain(r, "vcomp2", h.vcomp2, comp2, chk_v2)

    comp3 = {(B, A) for A in cells for B in cells if cells[A][1] == cells[B][0]}

    def chk_v3(k, v):
        B, A = k
        if cells.get(v) != (cells[A][0], cells[B][1]):
            return f"value {v}"

    _exact_domain(r, "vcomp3", h.vcomp3, comp3, chk_v3)

    hor3 = {(B, A) for A in cells for B in cells
            if arrows[cells[A][0]][1] == arrows[cells[B][0]][0]}

    def chk_h3(k, v):
        B, A = k
        s = h.vcomp2.get((cells[B][0], cells[A][0]))
        t = h.vcomp2.get((cells[B][1], cells[A][1]))
        if cells.get(v) != (s, t):
            return f"value {v}"

    _exact_domain(r, "hcomp3", h.hcomp3, hor3, chk_h3)

    for A, B in sorted(h.inverses3.items()):
        if A not in cells or B not in cells or cells[B] != (cells[A][1], cells[A][0]):
            r.structural("inverse3.boundary", (A,))
    if r.total:
        return r

    v2, i2, v3, h3, i3 = h.vcomp2, h.id2, h.vcomp3, h.hcomp3, h.id3

    for a in sorted(arrows):
        s, t = arrows[a]
        if v2[(a, i2[s])] != a or v2[(i2[t], a)] != a:
            r.axiom("vcomp2.unit", (a,))
    for (b, a) in sorted(comp2):
        for c in arrows:
            if arrows[c][0] == arrows[b][1]:
                if v2[(c, v2[(b, a)])] != v2[(v2[(c, b)], a)]:
                    r.axiom("vcomp2.assoc", (c, b, a))

    for A in sorted(cells):
        s, t = cells[A]
        if v3[(A, i3[s])] != A or v3[(i3[t], A)] != A:
            r.axiom("vcomp3.unit", (A,))
        o0, o1 = arrows[s]
        if h3[(A, i3[i2[o0]])] != A or h3[(i3[i2[o1]], A)] != A:
            r.axiom("hcomp3.unit", (A,))
    for (B, A) in sorted(comp3):
        for C in cells:
            if cells[C][0] == cells[B][1]:
                if v3[(C, v3[(B, A)])] != v3[(v3[(C, B)], A)]:
                    r.axiom("vcomp3.assoc", (C, B, A))
    for (B, A) in sorted(hor3):
        for C in cells:
            if arrows[cells[C][0]][0] == arrows[cells[B][0]][1]:
                if h3[(C, h3[(B, A)])] != h3[(h3[(C, B)], A)]:
                    r.axiom("hcomp3.assoc", (C, B, A))
    for (b, a) in sorted(comp2):
        if h3[(i3[b], i3[a])] != i3[v2[(b, a)]]:
            r.axiom("hcomp3.identity", (b, a))
    after = {}
    for (B2, B1) in comp3:
        after.setdefault(B1, []).append(B2)
    for (B, A) in sorted(hor3):
        for A2 in after.get(A, ()):
            for B2 in after.get(B, ()):
                lhs = h3[(v3[(B2, B)], v3[(A2, A)])]
                rhs = v3[(h3[(B2, A2)], h3[(B, A)])]
                if lhs != rhs:
                    r.axiom("middle-four", (B2, B, A2, A))

    for A, B in sorted(h.inverses3.items()):
        s, t = cells[A]
        if v3[(B, A)] != i3[s] or v3[(A, B)] != i3[t]:
            r.axiom("inverse3", (A, B))
    return r


def validate_gray_category(g: GrayCategory, cap: int = 100) -> ValidationReport:
    r = ValidationReport(cap=cap)
    n0, n1, n2, n3 = g.counts()

    # shape
    for f, (x, y) in enumerate(g.one):
        if not (0 <= x < n0 and 0 <= y < n0):
            r.structural("one.boundary", (f,))
    for a, (s, t) in enumerate(g.two):
        if not (0 <= s < n1 and 0 <= t < n1) or g.one[s] != g.one[t]:
            r.structural("two.boundary", (a,))
    for A, (s, t) in enumerate(g.three):
        if not (0 <= s < n2 and 0 <= t < n2) or g.two[s] != g.two[t]:
            r.structural("three.boundary", (A,))
    if len(g.id1) != n0 or len(g.id2) != n1 or len(g.id3) != n2:
        r.structural("identity.length", ())
    if r.total:
        return r
    for x in range(n0):
        if not (0 <= g.id1[x] < n1) or g.one[g.id1[x]] != (x, x):
            r.structural("id1.boundary", (x,))
    if r.total:
        return r

    for (x, y) in g.hom_pairs():
        r.merge(validate_two_category(g.hom(x, y), cap), prefix=f"hom({x},{y}).")
    if r.total:
        return r

    one, two, three = g.one, g.two, g.three
    e2 = lambda a: one[two[a][0]]           # noqa: E731  objects of a 2-cell
    e3 = lambda A: e2(three[A][0])          # noqa: E731

    comp = {(h, f) for f in range(n1) for h in range(n1) if one[f][1] == one[h][0]}

    def chk_c1(k, v):
        h, f = k
        if not (0 <= v < n1) or one[v] != (one[f][0], one[h][1]):
            return f"value {v}"

    _exact_domain(r, "comp1", g.comp1, comp, chk_c1)

    wl2_dom = {(h, a) for a in range(n2) for h in range(n1) if one[h][0] == e2(a)[1]}
    wr2_dom = {(a, h) for a in range(n2) for h in range(n1) if one[h][1] == e2(a)[0]}
    wl3_dom = {(h, A) for A in range(n3) for h in range(n1) if one[h][0] == e3(A)[1]}
    wr3_dom = {(A, h) for A in range(n3) for h in range(n1) if one[h][1] == e3(A)[0]}

    def chk_wl2(k, v):
        h, a = k
        if not (0 <= v < n2):
            return f"value {v}"
        s, t = two[a]
        if two[v] != (g.comp1.get((h, s)), g.comp1.get((h, t))):
            return f"value {v}"

    def chk_wr2(k, v):
        a, h = k
        if not (0 <= v < n2):
            return f"value {v}"
        s, t = two[a]
        if two[v] != (g.comp1.get((s, h)), g.comp1.get((t, h))):
            return f"value {v}"

    def chk_wl3(k, v):
        h, A = k
        if not (0 <= v < n3):
            return f"value {v}"
        s, t = three[A]
        if three[v] != (g.whisk2L.get((h, s)), g.whisk2L.get((h, t))):
            return f"value {v}"

    def chk_wr3(k, v):
        A, h = k
        if not (0 <= v < n3):
            return f"value {v}"
        s, t = three[A]
        if three[v] != (g.whisk2R.get((s, h)), g.whisk2R.get((t, h))):
            return f"value {v}"

    _exact_domain(r, "whisk2L", g.whisk2L, wl2_dom, chk_wl2)
    _exact_domain(r, "whisk2R", g.whisk2R, wr2_dom, chk_wr2)
    _exact_domain(r, "whisk3L", g.whisk3L, wl3_dom, chk_wl3)
    _exact_domain(r, "whisk3R", g.whisk3R, wr3_dom, chk_wr3)

    ich_dom = {(a, b) for a in range(n2) for b in range(n2) if e2(a)[1] == e2(b)[0]}

    def chk_ich(k, v):
        a, b = k
        f, f2 = two[a]
        h, h2 = two[b]
        try:
            s = g.vcomp2[(g.whisk2R[(b, f2)], g.whisk2L[(h, a)])]
            t = g.vcomp2[(g.whisk2L[(h2, a)], g.whisk2R[(b, f)])]
        except KeyError:
            return "boundary undefined"
        if not (0 <= v < n3) or three[v] != (s, t):
            return f"value {v}"

    _exact_domain(r, "interchanger", g.interchanger, ich_dom, chk_ich)
    if r.total:
        return r

    c1, v2, v3, h3 = g.comp1, g.vcomp2, g.vcomp3, g.hcomp3
    i1, i2, i3 = g.id1, g.id2, g.id3
    wl2, wr2, wl3, wr3 = g.whisk2L, g.whisk2R, g.whisk3L, g.whisk3R
    ich = g.interchanger

    # 1-cell composition
    for f in range(n1):
        x, y = one[f]
        if c1[(f, i1[x])] != f or c1[(i1[y], f)] != f:
            r.axiom("comp1.unit", (f,))
    for (h, f) in sorted(comp):
        for k in range(n1):
            if one[k][0] == one[h][1] and c1[(k, c1[(h, f)])] != c1[(c1[(k, h)], f)]:
                r.axiom("comp1.assoc", (k, h, f))

    # whiskering functors
    v2pairs = sorted(v2)
    v3pairs = sorted(v3)
    h3pairs = sorted(h3)
    for h in range(n1):
        x, y = one[h]
        for (b, a) in v2pairs:
            if e2(a)[1] == x and wl2[(h, v2[(b, a)])] != v2[(wl2[(h, b)], wl2[(h, a)])]:
                r.axiom("whisk2L.vcomp2", (h, b, a))
            if e2(a)[0] == y and wr2[(v2[(b, a)], h)] != v2[(wr2[(b, h)], wr2[(a, h)])]:
                r.axiom("whisk2R.vcomp2", (b, a, h))
        for f in range(n1):
            if one[f][1] == x and wl2[(h, i2[f])] != i2[c1[(h, f)]]:
                r.axiom("whisk2L.id2", (h, f))
            if one[f][0] == y and wr2[(i2[f], h)] != i2[c1[(f, h)]]:
                r.axiom("whisk2R.id2", (f, h))
        for a in range(n2):
            if e2(a)[1] == x and wl3[(h, i3[a])] != i3[wl2[(h, a)]]:
                r.axiom("whisk3L.id3", (h, a))
            if e2(a)[0] == y and wr3[(i3[a], h)] != i3[wr2[(a, h)]]:
                r.axiom("whisk3R.id3", (a, h))
        for (B, A) in v3pairs:
            if e3(A)[1] == x and wl3[(h, v3[(B, A)])] != v3[(wl3[(h, B)], wl3[(h, A)])]:
                r.axiom("whisk3L.vcomp3", (h, B, A))
            if e3(A)[0] == y and wr3[(v3[(B, A)], h)] != v3[(wr3[(B, h)], wr3[(A, h)])]:
                r.axiom("whisk3R.vcomp3", (B, A, h))
        for (B, A) in h3pairs:
            if e3(A)[1] == x and wl3[(h, h3[(B, A)])] != h3[(wl3[(h, B)], wl3[(h, A)])]:
                r.axiom("whisk3L.hcomp3", (h, B, A))
            if e3(A)[0] == y and wr3[(h3[(B, A)], h)] != h3[(wr3[(B, h)], wr3[(A, h)])]:
                r.axiom("whisk3R.hcomp3", (B, A, h))

    for a in range(n2):
        x, y = e2(a)
        if wl2[(i1[y], a)] != a or wr2[(a, i1[x])] != a:
            r.axiom("whisk2.unit", (a,))
    for A in range(n3):
        x, y = e3(A)
        if wl3[(i1[y], A)] != A or wr3[(A, i1[x])] != A:
            r.axiom("whisk3.unit", (A,))
    for (k, h) in sorted(comp):
        for a in range(n2):
            x, y = e2(a)
            if y == one[h][0] and wl2[(k, wl2[(h, a)])] != wl2[(c1[(k, h)], a)]:
                r.axiom("whisk2L.comp1", (k, h, a))
            if x == one[k][1] and wr2[(wr2[(a, k)], h)] != wr2[(a, c1[(k, h)])]:
                r.axiom("whisk2R.comp1", (a, k, h))
        for A in range(n3):
            x, y = e3(A)
            if y == one[h][0] and wl3[(k, wl3[(h, A)])] != wl3[(c1[(k, h)], A)]:
                r.axiom("whisk3L.comp1", (k, h, A))
            if x == one[k][1] and wr3[(wr3[(A, k)], h)] != wr3[(A, c1[(k, h)])]:
                r.axiom("whisk3R.comp1", (A, k, h))
    for a in range(n2):
        x, y = e2(a)
        for k in range(n1):
            if one[k][0] != y:
                continue
            for h in range(n1):
                if one[h][1] != x:
                    continue
                if wl2[(k, wr2[(a, h)])] != wr2[(wl2[(k, a)], h)]:
                    r.axiom("whisk2.bimodule", (k, a, h))
    for A in range(n3):
        x, y = e3(A)
        for k in range(n1):
            if one[k][0] != y:
                continue
            for h in range(n1):
                if one[h][1] != x:
                    continue
                if wl3[(k, wr3[(A, h)])] != wr3[(wl3[(k, A)], h)]:
                    r.axiom("whisk3.bimodule", (k, A, h))

    # interchanger
    def wh(B, A):
        """Horizontal composite where one side may be a 2-cell (as identity)."""
        return h3[(B, A)]

    ichs = sorted(ich_dom)
    for (a, b) in ichs:
        f, f2 = two[a]
        hh, h2 = two[b]
        val = ich[(a, b)]
        if val not in g.inverses3:
            r.axiom("interchanger.invertible", (a, b))
        if a == i2[f] or b == i2[hh]:
            if val != i3[three[val][0]]:
                r.axiom("interchanger.unit", (a, b))

    by_src3 = {}
    for A in range(n3):
        by_src3.setdefault(three[A][0], []).append(A)
    after2 = {}
    for (b2, b1) in v2pairs:
        after2.setdefault(b1, []).append(b2)

    for (a, b) in ichs:
        f, f2 = two[a]
        hh, h2 = two[b]
        val = ich[(a, b)]
        # naturality in the first argument: Gamma: a => a1
        for G in by_src3.get(a, ()):
            a1 = three[G][1]
            lhs = v3[(ich[(a1, b)], wh(i3[wr2[(b, f2)]], wl3[(hh, G)]))]
            rhs = v3[(wh(wl3[(h2, G)], i3[wr2[(b, f)]]), val)]
            if lhs != rhs:
                r.axiom("interchanger.natural1", (a, b, G))
        # naturality in the second argument: Delta: b => b1
        for D in by_src3.get(b, ()):
            b1 = three[D][1]
            lhs = v3[(ich[(a, b1)], wh(wr3[(D, f2)], i3[wl2[(hh, a)]]))]
            rhs = v3[(wh(i3[wl2[(h2, a)]], wr3[(D, f)]), val)]
            if lhs != rhs:
                r.axiom("interchanger.natural2", (a, b, D))
        # vertical composition in the first argument: a2 after a
        for a2 in after2.get(a, ()):
            lhs = ich[(v2[(a2, a)], b)]
            step1 = wh(ich[(a2, b)], i3[wl2[(hh, a)]])
            step2 = wh(i3[wl2[(h2, a2)]], val)
            if lhs != v3[(step2, step1)]:
                r.axiom("interchanger.vcomp1", (a2, a, b))
        # vertical composition in the second argument: b2 after b
        for b2 in after2.get(b, ()):
            lhs = ich[(a, v2[(b2, b)])]
            step1 = wh(i3[wr2[(b2, f2)]], val)
            step2 = wh(ich[(a, b2)], i3[wr2[(b, f)]])
            if lhs != v3[(step2, step1)]:
                r.axiom("interchanger.vcomp2", (a, b2, b))
        x, y = e2(a)
        z = e2(b)[1]
        for k in range(n1):
            # (k.b)_a = k.(b_a)
            if one[k][0] == z and ich[(a, wl2[(k, b)])] != wl3[(k, val)]:
                r.axiom("interchanger.whiskerL", (k, a, b))
            # b_(a.k) = (b_a).k
            if one[k][1] == x and ich[(wr2[(a, k)], b)] != wr3[(val, k)]:
                r.axiom("interchanger.whiskerR", (a, b, k))
    for a in range(n2):
        x, y = e2(a)
        for k in range(n1):
            if one[k][0] != y:
                continue
            ka = wl2[(k, a)]
            for b in range(n2):
                if e2(b)[0] != one[k][1]:
                    continue
                if ich[(a, wr2[(b, k)])] != ich[(ka, b)]:
                    r.axiom("interchanger.middle", (a, k, b))
    return r


# ---------------------------------------------------------------------------


def terminal_gray_category() -> GrayCategory:
    return GrayCategory(
        name="terminal",
        n0=1,
        one=[(0, 0)],
        two=[(0, 0)],
        three=[(0, 0)],
        id1=[0],
        comp1={(0, 0): 0},
        id2=[0],
        vcomp2={(0, 0): 0},
        whisk2L={(0, 0): 0},
        whisk2R={(0, 0): 0},
        id3=[0],
        vcomp3={(0, 0): 0},
        hcomp3={(0, 0): 0},
        whisk3L={(0, 0): 0},
        whisk3R={(0, 0): 0},
        interchanger={(0, 0): 0},
        inverses3={0: 0},
    )


# the shared terminal Gray-category; functors out of it compare by identity
ONE = terminal_gray_category()


def copy_category(g: GrayCategory, name: str | None = None) -> GrayCategory:
    return GrayCategory(
        name=g.name if name is None else name,
        n0=g.n0,
        one=list(g.one), two=list(g.two), three=list(g.three),
        id1=list(g.id1), comp1=dict(g.comp1), id2=list(g.id2),
        vcomp2=dict(g.vcomp2), whisk2L=dict(g.whisk2L), whisk2R=dict(g.whisk2R),
        id3=list(g.id3), vcomp3=dict(g.vcomp3), hcomp3=dict(g.hcomp3),
        whisk3L=dict(g.whisk3L), whisk3R=dict(g.whisk3R),
        interchanger=dict(g.interchanger), inverses3=dict(g.inverses3),
    )


TABLE_FIELDS = (
    "id1", "comp1", "id2", "vcomp2", "whisk2L", "whisk2R", "id3", "vcomp3",
    "hcomp3", "whisk3L", "whisk3R", "interchanger", "inverses3",
)
