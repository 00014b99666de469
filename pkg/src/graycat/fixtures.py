"""Small Gray-categories used as test inputs and examples.

Most fixtures are described by functions on readable cell labels and then
tabulated with :func:`tabulate`.  The linear family covers one-object
Gray-categories built from abelian group data:

* 1-cells: elements m of A1, composed by addition;
* 2-cells: pairs (m, a) with a in A2, from m to m + d(a);
* 3-cells: pairs ((m, a), x) with x in A3, from (m, a) to (m, a + delta(x));
* the interchanger of (m, a) and (n, b) is ((n + m, a + b), c(a, b)) for a
  bilinear c vanishing on the image of delta.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .core import ONE, GrayCategory


def tabulate(name, objects, ones, twos, threes, ops) -> GrayCategory:
    """Tabulate a Gray-category given on labels.

    ``ones``, ``twos`` and ``threes`` are lists of ``(label, source, target)``;
    ``ops`` maps operation names (id1, comp1, id2, vcomp2, whisk2L, whisk2R,
    id3, vcomp3, hcomp3, whisk3L, whisk3R, interchanger, inverse3) to
    functions on labels.  ``inverse3`` may return None for non-invertible cells.
    """
    o_ix = {x: i for i, x in enumerate(objects)}
    one_ix = {l: i for i, (l, _, _) in enumerate(ones)}
    two_ix = {l: i for i, (l, _, _) in enumerate(twos)}
    three_ix = {l: i for i, (l, _, _) in enumerate(threes)}
    if len(one_ix) != len(ones) or len(two_ix) != len(twos) or len(three_ix) != len(threes):
        raise ValueError("duplicate cell labels")
    one = [(o_ix[s], o_ix[t]) for _, s, t in ones]
    two = [(one_ix[s], one_ix[t]) for _, s, t in twos]
    three = [(two_ix[s], two_ix[t]) for _, s, t in threes]
    L1 = [l for l, _, _ in ones]
    L2 = [l for l, _, _ in twos]
    L3 = [l for l, _, _ in threes]

    def e2(a):
        return one[two[a][0]]

    def e3(A):
        return e2(three[A][0])

    g = GrayCategory(
        name=name, n0=len(objects), one=one, two=two, three=three,
        id1=[one_ix[ops["id1"](x)] for x in objects],
        comp1={}, id2=[two_ix[ops["id2"](f)] for f in L1],
        vcomp2={}, whisk2L={}, whisk2R={},
        id3=[three_ix[ops["id3"](a)] for a in L2],
        vcomp3={}, hcomp3={}, whisk3L={}, whisk3R={}, interchanger={}, inverses3={},
    )
    n1, n2, n3 = len(one), len(two), len(three)
    for f, h in product(range(n1), repeat=2):
        if one[f][1] == one[h][0]:
            g.comp1[(h, f)] = one_ix[ops["comp1"](L1[h], L1[f])]
    for a, b in product(range(n2), repeat=2):
        if two[a][1] == two[b][0]:
            g.vcomp2[(b, a)] = two_ix[ops["vcomp2"](L2[b], L2[a])]
    for h, a in product(range(n1), range(n2)):
        if one[h][0] == e2(a)[1]:
            g.whisk2L[(h, a)] = two_ix[ops["whisk2L"](L1[h], L2[a])]
        if one[h][1] == e2(a)[0]:
            g.whisk2R[(a, h)] = two_ix[ops["whisk2R"](L2[a], L1[h])]
    for A, B in product(range(n3), repeat=2):
        if three[A][1] == three[B][0]:
            g.vcomp3[(B, A)] = three_ix[ops["vcomp3"](L3[B], L3[A])]
        if two[three[A][0]][1] == two[three[B][0]][0]:
            g.hcomp3[(B, A)] = three_ix[ops["hcomp3"](L3[B], L3[A])]
    for h, A in product(range(n1), range(n3)):
        if one[h][0] == e3(A)[1]:
            g.whisk3L[(h, A)] = three_ix[ops["whisk3L"](L1[h], L3[A])]
        if one[h][1] == e3(A)[0]:
            g.whisk3R[(A, h)] = three_ix[ops["whisk3R"](L3[A], L1[h])]
    for a, b in product(range(n2), repeat=2):
        if e2(a)[1] == e2(b)[0]:
            g.interchanger[(a, b)] = three_ix[ops["interchanger"](L2[a], L2[b])]
    for A in range(n3):
        inv = ops["inverse3"](L3[A])
        if inv is not None:
            g.inverses3[A] = three_ix[inv]
    g.labels = (list(objects), L1, L2, L3)
    return g


# ---------------------------------------------------------------------------
# linear family


def _vec(moduli):
    return list(product(*[range(m) for m in moduli]))


def _add(moduli, u, v):
    return tuple((x + y) % m for x, y, m in zip(u, v, moduli))


def _neg(moduli, u):
    return tuple((-x) % m for x, m in zip(u, moduli))


def linear_gray_monoid(name, A1, A2, A3, d=None, delta=None, c=None) -> GrayCategory:
    """One-object Gray-category from abelian group data (see module docstring).

    A1, A2, A3 are tuples of moduli; d, delta, c are functions on tuples.
    """
    z1, z2, z3 = tuple(0 for _ in A1), tuple(0 for _ in A2), tuple(0 for _ in A3)
    d = d or (lambda a: z1)
    delta = delta or (lambda x: z2)
    c = c or (lambda a, b: z3)
    E1, E2, E3 = _vec(A1), _vec(A2), _vec(A3)
    add1 = lambda u, v: _add(A1, u, v)      # noqa: E731
    add2 = lambda u, v: _add(A2, u, v)      # noqa: E731
    add3 = lambda u, v: _add(A3, u, v)      # noqa: E731
    ones = [(m, "*", "*") for m in E1]
    twos = [((m, a), m, add1(m, d(a))) for m in E1 for a in E2]
    threes = [(((m, a), x), (m, a), (m, add2(a, delta(x)))) for m in E1 for a in E2 for x in E3]
    ops = {
        "id1": lambda x: z1,
        "comp1": lambda g, f: add1(g, f),
        "id2": lambda f: (f, z2),
        "vcomp2": lambda b, a: (a[0], add2(a[1], b[1])),
        "whisk2L": lambda h, a: (add1(h, a[0]), a[1]),
        "whisk2R": lambda a, h: (add1(a[0], h), a[1]),
        "id3": lambda a: (a, z3),
        "vcomp3": lambda B, A: (A[0], add3(A[1], B[1])),
        "hcomp3": lambda B, A: ((A[0][0], add2(A[0][1], B[0][1])), add3(A[1], B[1])),
        "whisk3L": lambda h, A: ((add1(h, A[0][0]), A[0][1]), A[1]),
        "whisk3R": lambda A, h: ((add1(A[0][0], h), A[0][1]), A[1]),
        "interchanger": lambda a, b: ((add1(b[0], a[0]), add2(a[1], b[1])), c(a[1], b[1])),
        "inverse3": lambda A: ((A[0][0], add2(A[0][1], delta(A[1]))), _neg(A3, A[1])),
    }
    return tabulate(name, ["*"], ones, twos, threes, ops)


def braided_z3() -> GrayCategory:
    """One object, one 1-cell, 2-cells Z/3, interchanger a*b mod 3."""
    return linear_gray_monoid("braided_z3", (), (3,), (3,),
                              c=lambda a, b: ((a[0] * b[0]) % 3,))


def graded_braided_z3() -> GrayCategory:
    """As braided_z3 but with 1-cells Z/3; semi-strict composites can fail to be compositional."""
    return linear_gray_monoid("graded_braided_z3", (3,), (3,), (3,),
                              c=lambda a, b: ((a[0] * b[0]) % 3,))


def asymmetric_braided() -> GrayCategory:
    """2-cells (Z/3)^2 with the non-symmetric interchanger a1*b2."""
    return linear_gray_monoid("asymmetric_braided", (), (3, 3), (3,),
                              c=lambda a, b: ((a[0] * b[1]) % 3,))


def shifted_z2() -> GrayCategory:
    """1-cells Z/2 with 2-cells (m, a): m => m + a, 3-cells Z/2, interchanger a*b."""
    return linear_gray_monoid("shifted_z2", (2,), (2,), (2,), d=lambda a: a,
                              c=lambda a, b: ((a[0] * b[0]) % 2,))


def braided_z2() -> GrayCategory:
    return linear_gray_monoid("braided_z2", (), (2,), (2,),
                              c=lambda a, b: ((a[0] * b[0]) % 2,))


# ---------------------------------------------------------------------------
# strict monoidal suspensions


def monoid_suspension(name, elements, mult, unit) -> GrayCategory:
    """Suspension of a monoid: one object, 1-cells the elements, higher cells trivial."""
    ones = [(m, "*", "*") for m in elements]
    twos = [(m, m, m) for m in elements]
    threes = [(m, m, m) for m in elements]
    ops = {
        "id1": lambda x: unit,
        "comp1": mult,
        "id2": lambda f: f,
        "vcomp2": lambda b, a: a,
        "whisk2L": mult,
        "whisk2R": mult,
        "id3": lambda a: a,
        "vcomp3": lambda B, A: A,
        "hcomp3": lambda B, A: A,
        "whisk3L": mult,
        "whisk3R": mult,
        "interchanger": lambda a, b: mult(b, a),
        "inverse3": lambda A: A,
    }
    return tabulate(name, ["*"], ones, twos, threes, ops)


def strict_monoid_z3() -> GrayCategory:
    return monoid_suspension("strict_z3", [0, 1, 2], lambda g, f: (g + f) % 3, 0)


def strict_monoid_leftzero() -> GrayCategory:
    """Three-element monoid {e, a, b} with xy = x for x != e; not commutative."""
    def mult(x, y):
        return y if x == "e" else x
    return monoid_suspension("strict_leftzero", ["e", "a", "b"], mult, "e")


def bz2() -> GrayCategory:
    return monoid_suspension("bz2", [0, 1], lambda g, f: (g + f) % 2, 0)


# ---------------------------------------------------------------------------
# walking shapes (no composable non-identity 1-cells)


def _walking(name, objects, arrows, twocells, threecells, three_mult=None):
    """Gray-category with objects, non-identity 1-cells ``arrows`` (label, s, t),
    non-identity 2-cells ``twocells`` (label, s, t) that do not compose with
    each other, and endo 3-cells ``threecells`` forming Z/2 on a chosen 2-cell."""
    ones = [(("i", x), x, x) for x in objects] + list(arrows)
    twos = [(("i", l), l, l) for l, _, _ in ones] + list(twocells)
    threes = [(("i", l), l, l) for l, _, _ in twos] + list(threecells)
    is_id1 = lambda f: isinstance(f, tuple) and f[0] == "i"      # noqa: E731
    is_id2 = lambda a: isinstance(a, tuple) and a[0] == "i"      # noqa: E731
    is_id3 = lambda A: isinstance(A, tuple) and A[0] == "i"      # noqa: E731

    def comp1(g, f):
        if is_id1(f):
            return g
        if is_id1(g):
            return f
        raise ValueError("no composable non-identity 1-cells")

    def vcomp2(b, a):
        if is_id2(a):
            return b
        if is_id2(b):
            return a
        raise ValueError

    def wl2(h, a):
        if is_id1(h):
            return a
        if is_id2(a):
            return ("i", comp1(h, a[1]))
        raise ValueError

    def wr2(a, h):
        if is_id1(h):
            return a
        if is_id2(a):
            return ("i", comp1(a[1], h))
        raise ValueError

    def vcomp3(B, A):
        if is_id3(A):
            return B
        if is_id3(B):
            return A
        return three_mult(B, A)

    def hcomp3(B, A):
        if is_id3(A) and is_id2(A[1]):
            return B
        if is_id3(B) and is_id2(B[1]):
            return A
        raise ValueError

    def wl3(h, A):
        if is_id1(h):
            return A
        if is_id3(A):
            return ("i", wl2(h, A[1]))
        raise ValueError

    def wr3(A, h):
        if is_id1(h):
            return A
        if is_id3(A):
            return ("i", wr2(A[1], h))
        raise ValueError

    def ich(a, b):
        if is_id2(a) or is_id2(b):
            # both composites agree and are whiskerings of the non-identity cell
            src = vcomp2(wr2(b, _tgt2(a)), wl2(_src2(b), a))
            return ("i", src)
        raise ValueError

    src_of = {l: s for l, s, _ in twos}
    tgt_of = {l: t for l, _, t in twos}

    def _src2(a):
        return src_of[a]

    def _tgt2(a):
        return tgt_of[a]

    ops = {
        "id1": lambda x: ("i", x), "comp1": comp1, "id2": lambda f: ("i", f),
        "vcomp2": vcomp2, "whisk2L": wl2, "whisk2R": wr2, "id3": lambda a: ("i", a),
        "vcomp3": vcomp3, "hcomp3": hcomp3, "whisk3L": wl3, "whisk3R": wr3,
        "interchanger": ich, "inverse3": lambda A: A,
    }
    return tabulate(name, objects, ones, twos, threes, ops)


def walking_arrow() -> GrayCategory:
    return _walking("walking_arrow", [0, 1], [("f", 0, 1)], [], [])


def walking_2cell() -> GrayCategory:
    return _walking("walking_2cell", [0, 1], [("f", 0, 1), ("g", 0, 1)],
                    [("phi", "f", "g")], [])


def walking_z2_3cell() -> GrayCategory:
    """A 2-cell phi: f => g carrying a 3-cell G: phi => phi with G.G = 1."""
    return _walking("walking_z2_3cell", [0, 1], [("f", 0, 1), ("g", 0, 1)],
                    [("phi", "f", "g")], [("G", "phi", "phi")],
                    three_mult=lambda B, A: ("i", "phi"))


def discrete(n: int) -> GrayCategory:
    return _walking(f"discrete{n}", list(range(n)), [], [], [])


def terminal() -> GrayCategory:
    return ONE


FIXTURES = {
    "terminal": terminal,
    "discrete2": lambda: discrete(2),
    "walking_arrow": walking_arrow,
    "walking_2cell": walking_2cell,
    "walking_z2_3cell": walking_z2_3cell,
    "bz2": bz2,
    "strict_z3": strict_monoid_z3,
    "strict_leftzero": strict_monoid_leftzero,
    "braided_z2": braided_z2,
    "braided_z3": braided_z3,
    "graded_braided_z3": graded_braided_z3,
    "shifted_z2": shifted_z2,
    "asymmetric_braided": asymmetric_braided,
}


@lru_cache(maxsize=None)
def fixture(name: str) -> GrayCategory:
    """The shared instance of a named fixture (functors compare by category identity)."""
    return FIXTURES[name]()
