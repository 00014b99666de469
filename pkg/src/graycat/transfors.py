"""Gray-functors, trinatural transformations, trimodifications, perturbations.

All transfors are frozen values whose components are tuples indexed by the
cell ids of a tabulated domain.  The codomain may be anything implementing
the operation interface of :class:`graycat.core.GrayCategory`, which lets
the same classes serve as cells of the lazily built transfor homs.

Boundary conventions for a trinatural p: F => G (f: X -> Y, phi: f => g):

* ``p.comp[X]``: FX -> GX
* ``p.adj[f].left`` is p_f: p_Y.Ff => Gf.p_X, with right adjoint p_f*
* ``p.local[phi]``: p_g(p_Y.Fphi) => (Gphi.p_X)p_f
* ``p.unitor[X]``: 1 => p_{1_X}
* ``p.compositor[k]`` for the k-th composable pair (g, f):
  (Gg.p_f)(p_g.Ff) => p_{gf}

A trimodification s: p => q has ``s.c2[X]``: p_X => q_X and
``s.c3[f]``: (Gf.s_X)p_f => q_f(s_Y.Ff); a perturbation W: s => t has
``W.c3[X]``: s_X => t_X.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import CellLookupError, GrayCategory
from .pasting import HComp3, Id3, VComp3, evaluate_pasting, obj_src, obj_tgt
from .report import ValidationReport


class _Value:
    """Frozen value with a cached hash over ``_key()``."""

    __slots__ = ()

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(other) is type(self) and (self is other or self._key() == other._key())

    def __hash__(self):
        h = self.__dict__.get("_h")
        if h is None:
            h = hash((type(self).__name__, self._key()))
            object.__setattr__(self, "_h", h)
        return h


@dataclass(frozen=True, eq=False)
class GrayFunctor(_Value):
    dom: GrayCategory
    cod: object
    f0: tuple
    f1: tuple
    f2: tuple
    f3: tuple

    def _key(self):
        return (id(self.dom), id(self.cod), self.f0, self.f1, self.f2, self.f3)

    def apply(self, d: int, c):
        return (self.f0, self.f1, self.f2, self.f3)[d][c]

    def __repr__(self):
        return f"GrayFunctor({self.f0}, {self.f1}, {self.f2}, {self.f3})"


@dataclass(frozen=True)
class AdjointEquivalence:
    left: object
    right: object
    unit: object
    counit: object


@dataclass(frozen=True, eq=False)
class Trinat(_Value):
    src: GrayFunctor
    tgt: GrayFunctor
    comp: tuple
    adj: tuple
    local: tuple
    unitor: tuple
    compositor: tuple

    def _key(self):
        return (self.src, self.tgt, self.comp, self.adj, self.local, self.unitor, self.compositor)

    @property
    def dom(self):
        return self.src.dom

    @property
    def cod(self):
        return self.src.cod

    def left(self, f):
        return self.adj[f].left

    def __repr__(self):
        return f"Trinat(comp={self.comp}, left={tuple(a.left for a in self.adj)})"


@dataclass(frozen=True, eq=False)
class Trimod(_Value):
    src: Trinat
    tgt: Trinat
    c2: tuple
    c3: tuple

    def _key(self):
        return (self.src, self.tgt, self.c2, self.c3)

    @property
    def dom(self):
        return self.src.dom

    @property
    def cod(self):
        return self.src.cod

    def __repr__(self):
        return f"Trimod(c2={self.c2}, c3={self.c3})"


@dataclass(frozen=True, eq=False)
class Perturbation(_Value):
    src: Trimod
    tgt: Trimod
    c3: tuple

    def _key(self):
        return (self.src, self.tgt, self.c3)

    @property
    def dom(self):
        return self.src.dom

    @property
    def cod(self):
        return self.src.cod

    def __repr__(self):
        return f"Perturbation(c3={self.c3})"


@dataclass(frozen=True)
class StrictnessClass:
    pseudo_icon: bool
    locally_strict: bool
    strict: bool
    unital: bool
    compositional: bool

    @property
    def semi_strict(self) -> bool:
        return self.unital and self.compositional


# ---------------------------------------------------------------------------
# law instances
#
# Every checker is a list of law instances.  ``needs`` names the component
# slots an instance reads, so the backtracking enumerator can run it as soon
# as those slots are filled.  ``fn`` returns None when the law holds and a
# short message otherwise; lookup failures count as violations too.


@dataclass(frozen=True)
class Law:
    name: str
    cells: tuple
    needs: tuple
    fn: Callable
    structural: bool = False


def run_laws(laws, B, x, report: ValidationReport) -> ValidationReport:
    for law in laws:
        msg = eval_law(law, B, x)
        if msg is not None:
            if law.structural:
                report.structural(law.name, law.cells, msg)
            else:
                report.axiom(law.name, law.cells, msg)
    return report


def eval_law(law, B, x):
    try:
        return law.fn(B, x)
    except (CellLookupError, KeyError, IndexError, TypeError, ValueError) as exc:
        return f"undefined ({type(exc).__name__})"


def _boundary(B, d, c, want_src, want_tgt):
    s, t = B.src(d, c), B.tgt(d, c)
    if s != want_src or t != want_tgt:
        return f"boundary {s} -> {t}, expected {want_src} -> {want_tgt}"
    return None


def _eq(a, b, what="sides differ"):
    return None if a == b else what


def _invertible(B, A):
    try:
        B.inv3(A)
    except CellLookupError:
        return "not invertible"
    return None


# -- Gray-functors -------------------------------------------------------------


def functor_laws(A: GrayCategory, B) -> list:
    """Law instances for a map of cells A -> B to be a Gray-functor.

    Slots: ('f0', x), ('f1', f), ('f2', a), ('f3', A)."""
    L = []

    def add(name, cells, needs, fn, structural=False):
        L.append(Law(name, cells, tuple(needs), fn, structural))

    for f, (x, y) in enumerate(A.one):
        add("f1.boundary", (f,), [("f0", x), ("f0", y), ("f1", f)],
            lambda B, F, f=f, x=x, y=y: _eq((B.src(1, F.f1[f]), B.tgt(1, F.f1[f])),
                                            (F.f0[x], F.f0[y]), "boundary"), True)
    for a, (s, t) in enumerate(A.two):
        add("f2.boundary", (a,), [("f1", s), ("f1", t), ("f2", a)],
            lambda B, F, a=a, s=s, t=t: _boundary(B, 2, F.f2[a], F.f1[s], F.f1[t]), True)
    for X, (s, t) in enumerate(A.three):
        add("f3.boundary", (X,), [("f2", s), ("f2", t), ("f3", X)],
            lambda B, F, X=X, s=s, t=t: _boundary(B, 3, F.f3[X], F.f2[s], F.f2[t]), True)
    for x, i in enumerate(A.id1):
        add("id1", (x,), [("f0", x), ("f1", i)],
            lambda B, F, x=x, i=i: _eq(F.f1[i], B.i1(F.f0[x])))
    for (g, f), h in sorted(A.comp1.items()):
        add("comp1", (g, f), [("f1", g), ("f1", f), ("f1", h)],
            lambda B, F, g=g, f=f, h=h: _eq(F.f1[h], B.c1(F.f1[g], F.f1[f])))
    for f, i in enumerate(A.id2):
        add("id2", (f,), [("f1", f), ("f2", i)],
            lambda B, F, f=f, i=i: _eq(F.f2[i], B.i2(F.f1[f])))
    for (b, a), c in sorted(A.vcomp2.items()):
        add("vcomp2", (b, a), [("f2", b), ("f2", a), ("f2", c)],
            lambda B, F, b=b, a=a, c=c: _eq(F.f2[c], B.v2(F.f2[b], F.f2[a])))
    for (h, a), c in sorted(A.whisk2L.items()):
        add("whisk2L", (h, a), [("f1", h), ("f2", a), ("f2", c)],
            lambda B, F, h=h, a=a, c=c: _eq(F.f2[c], B.wl2(F.f1[h], F.f2[a])))
    for (a, h), c in sorted(A.whisk2R.items()):
        add("whisk2R", (a, h), [("f1", h), ("f2", a), ("f2", c)],
            lambda B, F, h=h, a=a, c=c: _eq(F.f2[c], B.wr2(F.f2[a], F.f1[h])))
    for a, i in enumerate(A.id3):
        add("id3", (a,), [("f2", a), ("f3", i)],
            lambda B, F, a=a, i=i: _eq(F.f3[i], B.i3(F.f2[a])))
    for (Y, X), Z in sorted(A.vcomp3.items()):
        add("vcomp3", (Y, X), [("f3", Y), ("f3", X), ("f3", Z)],
            lambda B, F, Y=Y, X=X, Z=Z: _eq(F.f3[Z], B.v3(F.f3[Y], F.f3[X])))
    for (Y, X), Z in sorted(A.hcomp3.items()):
        add("hcomp3", (Y, X), [("f3", Y), ("f3", X), ("f3", Z)],
            lambda B, F, Y=Y, X=X, Z=Z: _eq(F.f3[Z], B.h3(F.f3[Y], F.f3[X])))
    for (h, X), Z in sorted(A.whisk3L.items()):
        add("whisk3L", (h, X), [("f1", h), ("f3", X), ("f3", Z)],
            lambda B, F, h=h, X=X, Z=Z: _eq(F.f3[Z], B.wl3(F.f1[h], F.f3[X])))
    for (X, h), Z in sorted(A.whisk3R.items()):
        add("whisk3R", (X, h), [("f1", h), ("f3", X), ("f3", Z)],
            lambda B, F, h=h, X=X, Z=Z: _eq(F.f3[Z], B.wr3(F.f3[X], F.f1[h])))
    for (a, b), Z in sorted(A.interchanger.items()):
        add("interchanger", (a, b), [("f2", a), ("f2", b), ("f3", Z)],
            lambda B, F, a=a, b=b, Z=Z: _eq(F.f3[Z], B.ich(F.f2[a], F.f2[b])))
    return L


def check_gray_functor(A: GrayCategory, B, F: GrayFunctor, cap: int = 100) -> ValidationReport:
    r = ValidationReport(cap=cap)
    sizes = A.counts()
    for d, tab in enumerate((F.f0, F.f1, F.f2, F.f3)):
        if len(tab) != sizes[d]:
            r.structural("map.length", (d,), f"{len(tab)} entries for {sizes[d]} cells")
    if r.total:
        return r
    laws = functor_laws(A, B)
    run_laws([l for l in laws if l.structural], B, F, r)
    if r.total:
        return r
    return run_laws([l for l in laws if not l.structural], B, F, r)


def identity_functor(A) -> GrayFunctor:
    n0, n1, n2, n3 = A.counts()
    return GrayFunctor(A, A, tuple(range(n0)), tuple(range(n1)), tuple(range(n2)), tuple(range(n3)))


def compose_functors(G: GrayFunctor, F: GrayFunctor) -> GrayFunctor:
    """G after F; F's codomain must be G's (tabulated) domain."""
    return GrayFunctor(F.dom, G.cod,
                       tuple(G.f0[x] for x in F.f0), tuple(G.f1[x] for x in F.f1),
                       tuple(G.f2[x] for x in F.f2), tuple(G.f3[x] for x in F.f3))


def constant_functor(A: GrayCategory, B, x) -> GrayFunctor:
    """Everything sent to identities on the object x of B."""
    i1 = B.i1(x)
    i2 = B.i2(i1)
    i3 = B.i3(i2)
    n0, n1, n2, n3 = A.counts()
    return GrayFunctor(A, B, (x,) * n0, (i1,) * n1, (i2,) * n2, (i3,) * n3)


# -- trinatural transformations --------------------------------------------------


def _pairs(A):
    return A.composable_pairs


def adj_laws(B, left_src, left_tgt, a) -> list:
    """Boundary, invertibility and triangle laws for one adjoint equivalence."""
    l, r, eta, eps = a.left, a.right, a.unit, a.counit
    out = []
    msg = _boundary(B, 2, l, left_src, left_tgt) or _boundary(B, 2, r, left_tgt, left_src)
    if msg:
        return [("adj.boundary", msg)]
    msg = (_boundary(B, 3, eta, B.i2(left_src), B.v2(r, l))
           or _boundary(B, 3, eps, B.v2(l, r), B.i2(left_tgt)))
    if msg:
        return [("adj.boundary", msg)]
    if _invertible(B, eta) or _invertible(B, eps):
        out.append(("adj.invertible", "unit or counit not invertible"))
    t1 = B.v3(B.h3(eps, B.i3(l)), B.h3(B.i3(l), eta))
    if t1 != B.i3(l):
        out.append(("adj.triangle1", "(eps*l)(l*eta) != 1"))
    t2 = B.v3(B.h3(B.i3(r), eps), B.h3(eta, B.i3(r)))
    if t2 != B.i3(r):
        out.append(("adj.triangle2", "(r*eps)(eta*r) != 1"))
    return out


def is_adjoint_equivalence(B, left_src, left_tgt, a) -> bool:
    try:
        return not adj_laws(B, left_src, left_tgt, a)
    except CellLookupError:
        return False


def trinat_boundaries(B, F, G, A, p, kind, i):
    """Expected (source, target) of a component of p; p may be partial."""
    if kind == "adj":
        x, y = A.one[i]
        return B.c1(p.comp[y], F.f1[i]), B.c1(G.f1[i], p.comp[x])
    if kind == "local":
        f, g = A.two[i]
        x, y = A.one[f]
        s = B.v2(p.adj[g].left, B.wl2(p.comp[y], F.f2[i]))
        t = B.v2(B.wr2(G.f2[i], p.comp[x]), p.adj[f].left)
        return s, t
    if kind == "unitor":
        return B.i2(p.comp[i]), p.adj[A.id1[i]].left
    if kind == "compositor":
        g, f = A.composable_pairs[i]
        s = B.v2(B.wl2(G.f1[g], p.adj[f].left), B.wr2(p.adj[g].left, F.f1[f]))
        return s, p.adj[A.comp1[(g, f)]].left
    raise ValueError(kind)


def trinat_laws(A: GrayCategory, B, F: GrayFunctor, G: GrayFunctor) -> list:
    """All law instances of a trinatural transformation F => G.

    Slots: ('comp', X), ('adj', f), ('local', phi), ('unitor', X),
    ('compositor', k)."""
    L = []
    pidx = A.pair_index
    one, two, three = A.one, A.two, A.three
    H, V, I3 = B.h3, B.v3, B.i3

    def add(name, cells, needs, fn, structural=False):
        L.append(Law(name, cells, tuple(needs), fn, structural))

    for X in range(A.n0):
        add("comp.boundary", (X,), [("comp", X)],
            lambda B, p, X=X: _eq((obj_src(B, 1, p.comp[X]), obj_tgt(B, 1, p.comp[X])),
                                  (F.f0[X], G.f0[X]), "boundary"), True)
    for f, (x, y) in enumerate(one):
        def fn(B, p, f=f):
            s, t = trinat_boundaries(B, F, G, A, p, "adj", f)
            bad = adj_laws(B, s, t, p.adj[f])
            return "; ".join(m for _, m in bad) or None
        add("adj", (f,), [("comp", x), ("comp", y), ("adj", f)], fn)
    for a, (f, g) in enumerate(two):
        x, y = one[f]
        needs = [("comp", x), ("comp", y), ("adj", f), ("adj", g), ("local", a)]

        def fn(B, p, a=a):
            s, t = trinat_boundaries(B, F, G, A, p, "local", a)
            return _boundary(B, 3, p.local[a], s, t) or _invertible(B, p.local[a])
        add("local.boundary", (a,), needs, fn, True)
    for X in range(A.n0):
        needs = [("comp", X), ("adj", A.id1[X]), ("unitor", X)]

        def fn(B, p, X=X):
            s, t = trinat_boundaries(B, F, G, A, p, "unitor", X)
            return _boundary(B, 3, p.unitor[X], s, t) or _invertible(B, p.unitor[X])
        add("unitor.boundary", (X,), needs, fn, True)
    for k, (g, f) in enumerate(A.composable_pairs):
        gf = A.comp1[(g, f)]
        needs = [("comp", o) for o in sorted({one[f][0], one[f][1], one[g][1]})]
        needs += [("adj", f), ("adj", g), ("adj", gf), ("compositor", k)]

        def fn(B, p, k=k):
            s, t = trinat_boundaries(B, F, G, A, p, "compositor", k)
            return _boundary(B, 3, p.compositor[k], s, t) or _invertible(B, p.compositor[k])
        add("compositor.boundary", (g, f), needs, fn, True)

    # p at an identity 2-cell
    for f in range(len(one)):
        i = A.id2[f]
        add("local.identity", (f,), [("adj", f), ("local", i)],
            lambda B, p, f=f, i=i: _eq(p.local[i], I3(p.adj[f].left)))
    # naturality in 3-cells
    for W, (a, a2) in enumerate(three):
        f, g = two[a]
        x, y = one[f]

        def fn(B, p, W=W, a=a, a2=a2, f=f, g=g, x=x, y=y):
            lhs = V(H(B.wr3(G.f3[W], p.comp[x]), I3(p.adj[f].left)), p.local[a])
            rhs = V(p.local[a2], H(I3(p.adj[g].left), B.wl3(p.comp[y], F.f3[W])))
            return _eq(lhs, rhs)
        add("local.natural", (W,), [("comp", x), ("comp", y), ("adj", f), ("adj", g),
                                    ("local", a), ("local", a2)], fn)
    # vertical composition of 2-cells
    for (b, a), c in sorted(A.vcomp2.items()):
        f, g = two[a]
        h = two[b][1]
        x, y = one[f]

        def fn(B, p, a=a, b=b, c=c, f=f, g=g, x=x, y=y):
            step1 = H(p.local[b], I3(B.wl2(p.comp[y], F.f2[a])))
            step2 = H(I3(B.wr2(G.f2[b], p.comp[x])), p.local[a])
            return _eq(p.local[c], V(step2, step1))
        add("local.vcomp", (b, a), [("comp", x), ("comp", y), ("adj", f), ("adj", g), ("adj", h),
                                     ("local", a), ("local", b), ("local", c)], fn)
    # right whiskering: g.phi for phi: f => f2 in hom(X, Y), g: Y -> Z
    for (g, a), ga in sorted(A.whisk2L.items()):
        f, f2 = two[a]
        x, y = one[f]
        z = one[g][1]
        k1, k2 = pidx[(g, f)], pidx[(g, f2)]

        def fn(B, p, g=g, a=a, ga=ga, f=f, f2=f2, x=x, y=y, z=z, k1=k1, k2=k2):
            Gg, Fa = G.f1[g], F.f2[a]
            lhs = V(B.inv3(p.local[ga]),
                    H(I3(B.wr2(B.wl2(Gg, G.f2[a]), p.comp[x])), p.compositor[k1]))
            s1 = H(B.inv3(B.wl3(Gg, p.local[a])), I3(B.wr2(p.adj[g].left, F.f1[f])))
            s2 = H(I3(B.wl2(Gg, p.adj[f2].left)), B.inv3(B.ich(Fa, p.adj[g].left)))
            s3 = H(p.compositor[k2], I3(B.wl2(B.c1(p.comp[z], F.f1[g]), Fa)))
            return _eq(lhs, V(s3, V(s2, s1)))
        gf, gf2 = A.comp1[(g, f)], A.comp1[(g, f2)]
        add("whisker.right", (g, a),
            [("comp", x), ("comp", y), ("comp", z), ("adj", f), ("adj", f2), ("adj", g),
             ("adj", gf), ("adj", gf2), ("local", a), ("local", ga),
             ("compositor", k1), ("compositor", k2)], fn)
    # left whiskering: psi.f for psi: g => g2 in hom(Y, Z), f: X -> Y
    for (a, f), af in sorted(A.whisk2R.items()):
        g, g2 = two[a]
        y, z = one[g]
        x = one[f][0]
        k1, k2 = pidx[(g, f)], pidx[(g2, f)]

        def fn(B, p, a=a, f=f, af=af, g=g, g2=g2, x=x, y=y, z=z, k1=k1, k2=k2):
            Gf, Ga, Ff = G.f1[f], G.f2[a], F.f1[f]
            lhs = V(B.inv3(p.local[af]),
                    H(I3(B.wr2(B.wr2(Ga, Gf), p.comp[x])), p.compositor[k1]))
            s1 = H(B.ich(p.adj[f].left, Ga), I3(B.wr2(p.adj[g].left, Ff)))
            s2 = H(I3(B.wl2(G.f1[g2], p.adj[f].left)), B.inv3(B.wr3(p.local[a], Ff)))
            s3 = H(p.compositor[k2], I3(B.wr2(B.wl2(p.comp[z], F.f2[a]), Ff)))
            return _eq(lhs, V(s3, V(s2, s1)))
        gf, g2f = A.comp1[(g, f)], A.comp1[(g2, f)]
        add("whisker.left", (a, f),
            [("comp", x), ("comp", y), ("comp", z), ("adj", f), ("adj", g), ("adj", g2),
             ("adj", gf), ("adj", g2f), ("local", a), ("local", af),
             ("compositor", k1), ("compositor", k2)], fn)
    # associativity
    for (f, e) in A.composable_pairs:
        fe = A.comp1[(f, e)]
        w, x = one[e]
        y = one[f][1]
        for g in (h for h in range(len(one)) if one[h][0] == y):
            gf = A.comp1[(g, f)]
            z = one[g][1]
            k_fe, k_g_fe = pidx[(f, e)], pidx[(g, fe)]
            k_gf, k_gf_e = pidx[(g, f)], pidx[(gf, e)]

            def fn(B, p, e=e, f=f, g=g, w=w, k_fe=k_fe, k_g_fe=k_g_fe, k_gf=k_gf, k_gf_e=k_gf_e,
                   gf=gf):
                Gg, Fe = G.f1[g], F.f1[e]
                lhs = V(p.compositor[k_g_fe],
                        H(B.wl3(Gg, p.compositor[k_fe]),
                          I3(B.wr2(p.adj[g].left, B.c1(F.f1[f], Fe)))))
                rhs = V(p.compositor[k_gf_e],
                        H(I3(B.wl2(G.f1[gf], p.adj[e].left)), B.wr3(p.compositor[k_gf], Fe)))
                return _eq(lhs, rhs)
            needs = [("comp", o) for o in sorted({w, x, y, z})]
            needs += [("adj", c) for c in sorted({e, f, g, fe, gf, A.comp1[(gf, e)]})]
            needs += [("compositor", k) for k in sorted({k_fe, k_g_fe, k_gf, k_gf_e})]
            add("associativity", (g, f, e), needs, fn)
    # unit laws
    for f, (x, y) in enumerate(one):
        k1, k2 = pidx[(f, A.id1[x])], pidx[(A.id1[y], f)]

        def fn_l(B, p, f=f, x=x, k1=k1):
            lhs = V(p.compositor[k1], H(B.wl3(G.f1[f], p.unitor[x]), I3(p.adj[f].left)))
            return _eq(lhs, I3(p.adj[f].left))

        def fn_r(B, p, f=f, y=y, k2=k2):
            lhs = V(p.compositor[k2], H(I3(p.adj[f].left), B.wr3(p.unitor[y], F.f1[f])))
            return _eq(lhs, I3(p.adj[f].left))
        add("unit.left", (f,), [("comp", x), ("comp", y), ("adj", f), ("adj", A.id1[x]),
                                ("unitor", x), ("compositor", k1)], fn_l)
        add("unit.right", (f,), [("comp", x), ("comp", y), ("adj", f), ("adj", A.id1[y]),
                                 ("unitor", y), ("compositor", k2)], fn_r)
    return L


def _shape_check(r, p, A):
    want = {"comp": A.n0, "adj": len(A.one), "local": len(A.two), "unitor": A.n0,
            "compositor": len(A.composable_pairs)}
    for k, n in want.items():
        if len(getattr(p, k)) != n:
            r.structural(f"{k}.length", (), f"{len(getattr(p, k))} entries for {n}")


def check_trinatural(F: GrayFunctor, G: GrayFunctor, p: Trinat, cap: int = 100) -> ValidationReport:
    A, B = F.dom, F.cod
    r = ValidationReport(cap=cap)
    if G.dom is not A or G.cod is not B:
        r.structural("functors.parallel", ())
        return r
    _shape_check(r, p, A)
    if r.total:
        return r
    laws = trinat_laws(A, B, F, G)
    run_laws([l for l in laws if l.structural or l.name == "adj"], B, p, r)
    if r.total:
        return r
    return run_laws([l for l in laws if not (l.structural or l.name == "adj")], B, p, r)


def identity_trinat(F: GrayFunctor) -> Trinat:
    A, B = F.dom, F.cod
    comp = tuple(B.i1(F.f0[x]) for x in range(A.n0))
    adj = []
    for f in range(len(A.one)):
        i2 = B.i2(F.f1[f])
        i3 = B.i3(i2)
        adj.append(AdjointEquivalence(i2, i2, i3, i3))
    local = tuple(B.i3(F.f2[a]) for a in range(len(A.two)))
    unitor = tuple(B.i3(B.i2(c)) for c in comp)
    compositor = tuple(B.i3(B.i2(F.f1[A.comp1[k]])) for k in A.composable_pairs)
    return Trinat(F, F, comp, tuple(adj), local, unitor, compositor)


# -- trimodifications --------------------------------------------------------------


def trimod_boundary(B, p, q, s, f, A):
    x, y = A.one[f]
    G, F = p.tgt, p.src
    src = B.v2(B.wl2(G.f1[f], s.c2[x]), p.adj[f].left)
    tgt = B.v2(q.adj[f].left, B.wr2(s.c2[y], F.f1[f]))
    return src, tgt


def trimod_laws(A: GrayCategory, B, p: Trinat, q: Trinat) -> list:
    """Slots: ('c2', X), ('c3', f)."""
    F, G = p.src, p.tgt
    H, V, I3 = B.h3, B.v3, B.i3
    one, two = A.one, A.two
    L = []

    def add(name, cells, needs, fn, structural=False):
        L.append(Law(name, cells, tuple(needs), fn, structural))

    for X in range(A.n0):
        add("c2.boundary", (X,), [("c2", X)],
            lambda B, s, X=X: _boundary(B, 2, s.c2[X], p.comp[X], q.comp[X]), True)
    for f, (x, y) in enumerate(one):
        def fn(B, s, f=f):
            src, tgt = trimod_boundary(B, p, q, s, f, A)
            return _boundary(B, 3, s.c3[f], src, tgt) or _invertible(B, s.c3[f])
        add("c3.boundary", (f,), [("c2", x), ("c2", y), ("c3", f)], fn, True)
    # local modification condition
    for a, (f, g) in enumerate(two):
        x, y = one[f]

        def fn(B, s, a=a, f=f, g=g, x=x, y=y):
            Fa, Ga = F.f2[a], G.f2[a]
            sX, sY = s.c2[x], s.c2[y]
            l1 = H(I3(B.wr2(Ga, q.comp[x])), s.c3[f])
            l2 = H(B.inv3(q.local[a]), I3(B.wr2(sY, F.f1[f])))
            l3 = H(I3(q.adj[g].left), B.inv3(B.ich(Fa, sY)))
            r1 = H(B.ich(sX, Ga), I3(p.adj[f].left))
            r2 = H(I3(B.wl2(G.f1[g], sX)), B.inv3(p.local[a]))
            r3 = H(s.c3[g], I3(B.wl2(p.comp[y], Fa)))
            return _eq(V(l3, V(l2, l1)), V(r3, V(r2, r1)))
        add("local-modification", (a,), [("c2", x), ("c2", y), ("c3", f), ("c3", g)], fn)
    for X in range(A.n0):
        i = A.id1[X]

        def fn(B, s, X=X, i=i):
            lhs = H(q.unitor[X], I3(s.c2[X]))
            rhs = V(s.c3[i], H(I3(s.c2[X]), p.unitor[X]))
            return _eq(lhs, rhs)
        add("unit", (X,), [("c2", X), ("c3", i)], fn)
    for k, (g, f) in enumerate(A.composable_pairs):
        gf = A.comp1[(g, f)]
        x, y = one[f]
        z = one[g][1]

        def fn(B, s, k=k, g=g, f=f, gf=gf, x=x, z=z):
            Gg, Ff = G.f1[g], F.f1[f]
            lhs = V(s.c3[gf], H(I3(B.wl2(G.f1[gf], s.c2[x])), p.compositor[k]))
            r1 = H(B.wl3(Gg, s.c3[f]), I3(B.wr2(p.adj[g].left, Ff)))
            r2 = H(I3(B.wl2(Gg, q.adj[f].left)), B.wr3(s.c3[g], Ff))
            r3 = H(q.compositor[k], I3(B.wr2(s.c2[z], F.f1[gf])))
            return _eq(lhs, V(r3, V(r2, r1)))
        needs = [("c2", o) for o in sorted({x, y, z})] + [("c3", c) for c in sorted({f, g, gf})]
        add("composition", (g, f), needs, fn)
    return L


def check_trimodification(p: Trinat, q: Trinat, s: Trimod, cap: int = 100) -> ValidationReport:
    A, B = p.dom, p.cod
    r = ValidationReport(cap=cap)
    if q.src != p.src or q.tgt != p.tgt:
        r.structural("trinats.parallel", ())
        return r
    if len(s.c2) != A.n0 or len(s.c3) != len(A.one):
        r.structural("components.length", ())
        return r
    laws = trimod_laws(A, B, p, q)
    run_laws([l for l in laws if l.structural], B, s, r)
    if r.total:
        return r
    return run_laws([l for l in laws if not l.structural], B, s, r)


def identity_trimod(p: Trinat) -> Trimod:
    B = p.cod
    c2 = tuple(B.i2(c) for c in p.comp)
    c3 = tuple(B.i3(a.left) for a in p.adj)
    return Trimod(p, p, c2, c3)


# -- perturbations -------------------------------------------------------------------


def perturbation_laws(A: GrayCategory, B, s: Trimod, t: Trimod) -> list:
    """Slots: ('c3', X)."""
    p, q = s.src, s.tgt
    F, G = p.src, p.tgt
    L = []
    for X in range(A.n0):
        L.append(Law("c3.boundary", (X,), (("c3", X),),
                     lambda B, W, X=X: _boundary(B, 3, W.c3[X], s.c2[X], t.c2[X]), True))
    for f, (x, y) in enumerate(A.one):
        def fn(B, W, f=f, x=x, y=y):
            lhs = B.v3(t.c3[f], B.h3(B.wl3(G.f1[f], W.c3[x]), B.i3(p.adj[f].left)))
            rhs = B.v3(B.h3(B.i3(q.adj[f].left), B.wr3(W.c3[y], F.f1[f])), s.c3[f])
            return _eq(lhs, rhs)
        L.append(Law("square", (f,), (("c3", x), ("c3", y)), fn))
    return L


def check_perturbation(s: Trimod, t: Trimod, W: Perturbation, cap: int = 100) -> ValidationReport:
    A, B = s.dom, s.cod
    r = ValidationReport(cap=cap)
    if s.src != t.src or s.tgt != t.tgt:
        r.structural("trimods.parallel", ())
        return r
    if len(W.c3) != A.n0:
        r.structural("components.length", ())
        return r
    laws = perturbation_laws(A, B, s, t)
    run_laws([l for l in laws if l.structural], B, W, r)
    if r.total:
        return r
    return run_laws([l for l in laws if not l.structural], B, W, r)


def identity_perturbation(s: Trimod) -> Perturbation:
    B = s.cod
    return Perturbation(s, s, tuple(B.i3(a) for a in s.c2))


# -- strictness and mates -------------------------------------------------------------


def _all_id3(B, cells) -> bool:
    return all(c == B.i3(B.src(3, c)) for c in cells)


def classify_strictness(p: Trinat) -> StrictnessClass:
    A, B = p.dom, p.cod
    F, G = p.src, p.tgt
    icon = F.f0 == G.f0 and all(c == B.i1(F.f0[x]) for x, c in enumerate(p.comp))
    local = _all_id3(B, p.local) and all(
        _all_id3(B, (a.unit, a.counit)) for a in p.adj)
    if local:
        # p_phi* is then an identity as well, being pasted from identities
        local = all(_all_id3(B, (mate_local(p, a),)) for a in range(len(A.two)))
    unital = _all_id3(B, p.unitor)
    compositional = _all_id3(B, p.compositor)
    strict = (local and unital and compositional
              and all(a.left == B.i2(B.src(2, a.left)) and a.right == a.left for a in p.adj))
    return StrictnessClass(icon, local, strict, unital, compositional)


def is_strict_trimod(s: Trimod) -> bool:
    """Identity 2-cell components and identity 3-cell components."""
    B = s.cod
    return all(B.is_identity(2, c) for c in s.c2) and _all_id3(B, s.c3)


def mate(B, x, adj_src: AdjointEquivalence, adj_tgt: AdjointEquivalence, u, v):
    """Mate of x: adj_tgt.left . u => v . adj_src.left.

    Returns the 3-cell u . adj_src.right => adj_tgt.right . v obtained by
    pasting with the unit of adj_tgt and the counit of adj_src."""
    r1, e1 = adj_src.right, adj_src.counit
    r2, n2 = adj_tgt.right, adj_tgt.unit
    e = VComp3(
        HComp3(Id3(B.v2(r2, v)), e1),
        VComp3(
            HComp3(Id3(r2), HComp3(x, Id3(r1))),
            HComp3(n2, Id3(B.v2(u, r1))),
        ),
    )
    return evaluate_pasting(B, e, "mate")


def unmate(B, y, adj_src: AdjointEquivalence, adj_tgt: AdjointEquivalence, u, v):
    """Inverse of :func:`mate`: from u . r1 => r2 . v back to l2 . u => v . l1."""
    l1, n1 = adj_src.left, adj_src.unit
    l2, e2 = adj_tgt.left, adj_tgt.counit
    e = VComp3(
        HComp3(e2, Id3(B.v2(v, l1))),
        VComp3(
            HComp3(Id3(l2), HComp3(y, Id3(l1))),
            HComp3(Id3(B.v2(l2, u)), n1),
        ),
    )
    return evaluate_pasting(B, e, "unmate")


def mate_local(p: Trinat, a: int):
    """p_phi*: (p_Y.Fphi) p_f* => p_g* (Gphi.p_X)."""
    A, B = p.dom, p.cod
    f, g = A.two[a]
    x, y = A.one[f]
    u = B.wl2(p.comp[y], p.src.f2[a])
    v = B.wr2(p.tgt.f2[a], p.comp[x])
    return mate(B, p.local[a], p.adj[f], p.adj[g], u, v)


def mate_trimod(s: Trimod, f: int):
    """s_f*: (s_Y.Ff) p_f* => q_f* (Gf.s_X), the mate of the inverse of s_f."""
    A, B = s.dom, s.cod
    p, q = s.src, s.tgt
    x, y = A.one[f]
    u = B.wr2(s.c2[y], p.src.f1[f])
    v = B.wl2(p.tgt.f1[f], s.c2[x])
    return mate(B, B.inv3(s.c3[f]), p.adj[f], q.adj[f], u, v)


def dual_adjoint(B, a: AdjointEquivalence) -> AdjointEquivalence:
    """The adjoint equivalence right -| left with inverted counit and unit."""
    return AdjointEquivalence(a.right, a.left, B.inv3(a.counit), B.inv3(a.unit))


__all__ = [
    "GrayFunctor", "AdjointEquivalence", "Trinat", "Trimod", "Perturbation", "StrictnessClass",
    "Law", "run_laws", "eval_law", "functor_laws", "trinat_laws", "trimod_laws",
    "perturbation_laws", "check_gray_functor", "check_trinatural", "check_trimodification",
    "check_perturbation", "identity_functor", "compose_functors", "constant_functor",
    "identity_trinat", "identity_trimod", "identity_perturbation", "classify_strictness",
    "is_strict_trimod", "mate", "unmate", "mate_local", "mate_trimod", "dual_adjoint",
    "trinat_boundaries", "trimod_boundary", "adj_laws", "is_adjoint_equivalence",
]
