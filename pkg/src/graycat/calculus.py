"""The Gray-category of Gray-functors and transfors, and the generalized
interchangers between transfors of adjacent levels.

:class:`LazyHom` implements the cell-operation interface of
:class:`graycat.core.GrayCategory` on transfor values, so every construction
here can be applied again one level up (transfors into a hom of transfors).
Composite 3-cells are written as pasting expressions and folded by
:func:`graycat.pasting.evaluate_pasting`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import CellLookupError
from .pasting import (
    HComp3, Id3, Interchanger, Inverse3, Whisk3L, Whisk3R, evaluate_pasting, hchain, vchain,
)
from .transfors import (
    AdjointEquivalence, GrayFunctor, Perturbation, Trimod, Trinat, compose_functors,
    identity_perturbation, identity_trimod,
    identity_trinat,
)


def _need(cond, what):
    if not cond:
        raise CellLookupError(what)


# ---------------------------------------------------------------------------
# trinatural transformations


@lru_cache(maxsize=1 << 16)
def compose_trinat(q: Trinat, p: Trinat) -> Trinat:
    """q after p for p: F => G and q: G => H."""
    _need(p.tgt == q.src, "compose_trinat: p.tgt != q.src")
    A, B = p.dom, p.cod
    F, H = p.src, q.tgt
    comp = tuple(B.c1(q.comp[x], p.comp[x]) for x in range(A.n0))
    adj = []
    for f, (x, y) in enumerate(A.one):
        pa, qa = p.adj[f], q.adj[f]
        qY, pX = q.comp[y], p.comp[x]
        l = B.v2(B.wr2(qa.left, pX), B.wl2(qY, pa.left))
        r = B.v2(B.wl2(qY, pa.right), B.wr2(qa.right, pX))
        unit = evaluate_pasting(B, vchain(
            Whisk3L(qY, pa.unit),
            hchain(Id3(B.wl2(qY, pa.right)), Whisk3R(qa.unit, pX), Id3(B.wl2(qY, pa.left))),
        ), f"compose.unit[{f}]")
        counit = evaluate_pasting(B, vchain(
            hchain(Id3(B.wr2(qa.left, pX)), Whisk3L(qY, pa.counit), Id3(B.wr2(qa.right, pX))),
            Whisk3R(qa.counit, pX),
        ), f"compose.counit[{f}]")
        adj.append(AdjointEquivalence(l, r, unit, counit))
    local = []
    for a, (f, g) in enumerate(A.two):
        x, y = A.one[f]
        local.append(evaluate_pasting(B, vchain(
            HComp3(Id3(B.wr2(q.adj[g].left, p.comp[x])), Whisk3L(q.comp[y], p.local[a])),
            HComp3(Whisk3R(q.local[a], p.comp[x]), Id3(B.wl2(q.comp[y], p.adj[f].left))),
        ), f"compose.local[{a}]"))
    unitor = tuple(
        evaluate_pasting(B, HComp3(Whisk3R(q.unitor[x], p.comp[x]),
                                   Whisk3L(q.comp[x], p.unitor[x])), f"compose.unitor[{x}]")
        for x in range(A.n0))
    compositor = []
    for k, (g, f) in enumerate(A.composable_pairs):
        x = A.one[f][0]
        z = A.one[g][1]
        e = vchain(
            hchain(Id3(B.wl2(H.f1[g], B.wr2(q.adj[f].left, p.comp[x]))),
                   Inverse3(Interchanger(p.adj[f].left, q.adj[g].left)),
                   Id3(B.wl2(q.comp[z], B.wr2(p.adj[g].left, F.f1[f])))),
            HComp3(Whisk3R(q.compositor[k], p.comp[x]), Whisk3L(q.comp[z], p.compositor[k])),
        )
        compositor.append(evaluate_pasting(B, e, f"compose.compositor[{g},{f}]"))
    return Trinat(F, H, comp, tuple(adj), tuple(local), unitor, tuple(compositor))


# ---------------------------------------------------------------------------
# trimodifications


@lru_cache(maxsize=1 << 16)
def vcompose_trimod(t: Trimod, s: Trimod) -> Trimod:
    """t after s for s: p => q and t: q => r."""
    _need(s.tgt == t.src, "vcompose_trimod: s.tgt != t.src")
    A, B = s.dom, s.cod
    p = s.src
    F, G = p.src, p.tgt
    c2 = tuple(B.v2(t.c2[x], s.c2[x]) for x in range(A.n0))
    c3 = []
    for f, (x, y) in enumerate(A.one):
        e = vchain(HComp3(Id3(B.wl2(G.f1[f], t.c2[x])), s.c3[f]),
                   HComp3(t.c3[f], Id3(B.wr2(s.c2[y], F.f1[f]))))
        c3.append(evaluate_pasting(B, e, f"vcompose.c3[{f}]"))
    return Trimod(p, t.tgt, c2, tuple(c3))


@lru_cache(maxsize=1 << 16)
def whisker_trimod_right(t: Trimod, p: Trinat) -> Trimod:
    """t.p for p: F => G and t: q => q' between trinats G => H."""
    _need(t.src.src == p.tgt, "whisker: t does not start where p ends")
    A, B = p.dom, p.cod
    q, q2 = t.src, t.tgt
    c2 = tuple(B.wr2(t.c2[x], p.comp[x]) for x in range(A.n0))
    c3 = []
    for f, (x, y) in enumerate(A.one):
        e = vchain(
            HComp3(Whisk3R(t.c3[f], p.comp[x]), Id3(B.wl2(q.comp[y], p.adj[f].left))),
            HComp3(Id3(B.wr2(q2.adj[f].left, p.comp[x])),
                   Interchanger(p.adj[f].left, t.c2[y])),
        )
        c3.append(evaluate_pasting(B, e, f"whiskerR.c3[{f}]"))
    return Trimod(compose_trinat(q, p), compose_trinat(q2, p), c2, tuple(c3))


@lru_cache(maxsize=1 << 16)
def whisker_trimod_left(q: Trinat, s: Trimod) -> Trimod:
    """q.s for s: p => p' between trinats F => G and q: G => H."""
    _need(s.src.tgt == q.src, "whisker: s does not end where q starts")
    A, B = s.dom, s.cod
    p, p2 = s.src, s.tgt
    c2 = tuple(B.wl2(q.comp[x], s.c2[x]) for x in range(A.n0))
    c3 = []
    for f, (x, y) in enumerate(A.one):
        e = vchain(
            HComp3(Inverse3(Interchanger(s.c2[x], q.adj[f].left)),
                   Id3(B.wl2(q.comp[y], p.adj[f].left))),
            HComp3(Id3(B.wr2(q.adj[f].left, p2.comp[x])), Whisk3L(q.comp[y], s.c3[f])),
        )
        c3.append(evaluate_pasting(B, e, f"whiskerL.c3[{f}]"))
    return Trimod(compose_trinat(q, p), compose_trinat(q, p2), c2, tuple(c3))


def whisker_trimod(side: str, cell, trimod):
    """side 'left': cell is a trinat q and the result is q.trimod;
    side 'right': the result is trimod.cell."""
    if side == "left":
        return whisker_trimod_left(cell, trimod)
    if side == "right":
        return whisker_trimod_right(trimod, cell)
    raise ValueError(side)


# ---------------------------------------------------------------------------
# perturbations


def vcompose_pert(W2: Perturbation, W1: Perturbation) -> Perturbation:
    _need(W1.tgt == W2.src, "vcompose_pert: not composable")
    B = W1.cod
    return Perturbation(W1.src, W2.tgt, tuple(B.v3(b, a) for b, a in zip(W2.c3, W1.c3)))


def hcompose_pert(W2: Perturbation, W1: Perturbation) -> Perturbation:
    """Horizontal composite inside a hom: W1: s => s', W2: t => t' with t after s."""
    _need(W1.src.tgt == W2.src.src, "hcompose_pert: not composable")
    B = W1.cod
    return Perturbation(vcompose_trimod(W2.src, W1.src), vcompose_trimod(W2.tgt, W1.tgt),
                        tuple(B.h3(b, a) for b, a in zip(W2.c3, W1.c3)))


def whisker_pert_left(q: Trinat, W: Perturbation) -> Perturbation:
    _need(W.src.src.tgt == q.src, "whisker_pert_left: not composable")
    B = W.cod
    return Perturbation(whisker_trimod_left(q, W.src), whisker_trimod_left(q, W.tgt),
                        tuple(B.wl3(q.comp[x], c) for x, c in enumerate(W.c3)))


def whisker_pert_right(W: Perturbation, p: Trinat) -> Perturbation:
    _need(W.src.src.src == p.tgt, "whisker_pert_right: not composable")
    B = W.cod
    return Perturbation(whisker_trimod_right(W.src, p), whisker_trimod_right(W.tgt, p),
                        tuple(B.wr3(c, p.comp[x]) for x, c in enumerate(W.c3)))


def interchanger_trimods(s: Trimod, t: Trimod) -> Perturbation:
    """t_s for s: p => p' (F => G) and t: q => q' (G => H).

    Runs from (t.p')(q.s) to (q'.s)(t.p) with components the interchangers
    of s_X and t_X."""
    _need(s.src.tgt == t.src.src, "interchanger: not composable")
    B = s.cod
    p, p2, q, q2 = s.src, s.tgt, t.src, t.tgt
    src = vcompose_trimod(whisker_trimod_right(t, p2), whisker_trimod_left(q, s))
    tgt = vcompose_trimod(whisker_trimod_left(q2, s), whisker_trimod_right(t, p))
    return Perturbation(src, tgt, tuple(B.ich(a, b) for a, b in zip(s.c2, t.c2)))


def inverse_pert(W: Perturbation) -> Perturbation:
    B = W.cod
    return Perturbation(W.tgt, W.src, tuple(B.inv3(c) for c in W.c3))


def perturbation_calculus(op: str, *args) -> Perturbation:
    """Dispatch: 'vcomp', 'hcomp', 'whiskerL' (trinat, pert), 'whiskerR'
    (pert, trinat), 'interchanger' (trimod, trimod), 'inverse', 'identity'."""
    table = {
        "vcomp": vcompose_pert, "hcomp": hcompose_pert, "whiskerL": whisker_pert_left,
        "whiskerR": whisker_pert_right, "interchanger": interchanger_trimods,
        "inverse": inverse_pert, "identity": identity_perturbation,
    }
    return table[op](*args)


def identity_transfor(level: int, x):
    """level 1: identity trinat on a functor; 2: identity trimod on a trinat;
    3: identity perturbation on a trimod."""
    return {1: identity_trinat, 2: identity_trimod, 3: identity_perturbation}[level](x)


# ---------------------------------------------------------------------------
# the lazy hom


class LazyHom:
    """Gray-category of functors A -> B and transfors between them.

    Cells are transfor values; nothing is enumerated.  Operations raise
    :class:`CellLookupError` on non-composable input, like a tabulated
    category does."""

    def __init__(self, A, B, name: str = ""):
        self.A, self.B = A, B
        self.name = name or f"[{getattr(A, 'name', 'A')},{getattr(B, 'name', 'B')}]"
        self._memo = {}

    def _m(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            v = self._memo[key] = fn()
            return v

    def src(self, d, c):
        return c.src

    def tgt(self, d, c):
        return c.tgt

    def i1(self, F):
        return self._m(("i1", F), lambda: identity_trinat(F))

    def c1(self, q, p):
        return self._m(("c1", q, p), lambda: compose_trinat(q, p))

    def i2(self, p):
        return self._m(("i2", p), lambda: identity_trimod(p))

    def v2(self, t, s):
        return self._m(("v2", t, s), lambda: vcompose_trimod(t, s))

    def wl2(self, q, s):
        return self._m(("wl2", q, s), lambda: whisker_trimod_left(q, s))

    def wr2(self, t, p):
        return self._m(("wr2", t, p), lambda: whisker_trimod_right(t, p))

    def i3(self, s):
        return self._m(("i3", s), lambda: identity_perturbation(s))

    def v3(self, W2, W1):
        return self._m(("v3", W2, W1), lambda: vcompose_pert(W2, W1))

    def h3(self, W2, W1):
        return self._m(("h3", W2, W1), lambda: hcompose_pert(W2, W1))

    def wl3(self, q, W):
        return self._m(("wl3", q, W), lambda: whisker_pert_left(q, W))

    def wr3(self, W, p):
        return self._m(("wr3", W, p), lambda: whisker_pert_right(W, p))

    def ich(self, s, t):
        return self._m(("ich", s, t), lambda: interchanger_trimods(s, t))

    def inv3(self, W):
        return self._m(("inv3", W), lambda: inverse_pert(W))

    def is_identity(self, d, c):
        if d == 1:
            return c == self.i1(c.src)
        if d == 2:
            return c == self.i2(c.src)
        return c == self.i3(c.src)

    def __repr__(self):
        return f"LazyHom({self.name})"


# ---------------------------------------------------------------------------
# whiskering transfors by Gray-functors


def whisker_functor(S: GrayFunctor, x):
    """S applied after a transfor (or functor) x whose codomain is S.dom."""
    if isinstance(x, GrayFunctor):
        return compose_functors(S, x)
    if isinstance(x, Trinat):
        adj = tuple(AdjointEquivalence(S.f2[a.left], S.f2[a.right], S.f3[a.unit], S.f3[a.counit])
                    for a in x.adj)
        return Trinat(compose_functors(S, x.src), compose_functors(S, x.tgt),
                      tuple(S.f1[c] for c in x.comp), adj, tuple(S.f3[c] for c in x.local),
                      tuple(S.f3[c] for c in x.unitor), tuple(S.f3[c] for c in x.compositor))
    if isinstance(x, Trimod):
        return Trimod(whisker_functor(S, x.src), whisker_functor(S, x.tgt),
                      tuple(S.f2[c] for c in x.c2), tuple(S.f3[c] for c in x.c3))
    if isinstance(x, Perturbation):
        return Perturbation(whisker_functor(S, x.src), whisker_functor(S, x.tgt),
                            tuple(S.f3[c] for c in x.c3))
    raise TypeError(type(x))


def restrict_functor(x, F: GrayFunctor):
    """A transfor (or functor) x out of F.cod, restricted along F."""
    if isinstance(x, GrayFunctor):
        return compose_functors(x, F)
    A = x.dom
    if isinstance(x, Trinat):
        pidx = A.pair_index
        return Trinat(compose_functors(x.src, F), compose_functors(x.tgt, F),
                      tuple(x.comp[F.f0[i]] for i in range(F.dom.n0)),
                      tuple(x.adj[F.f1[f]] for f in range(len(F.dom.one))),
                      tuple(x.local[F.f2[a]] for a in range(len(F.dom.two))),
                      tuple(x.unitor[F.f0[i]] for i in range(F.dom.n0)),
                      tuple(x.compositor[pidx[(F.f1[g], F.f1[f])]]
                            for (g, f) in F.dom.composable_pairs))
    if isinstance(x, Trimod):
        return Trimod(restrict_functor(x.src, F), restrict_functor(x.tgt, F),
                      tuple(x.c2[F.f0[i]] for i in range(F.dom.n0)),
                      tuple(x.c3[F.f1[f]] for f in range(len(F.dom.one))))
    if isinstance(x, Perturbation):
        return Perturbation(restrict_functor(x.src, F), restrict_functor(x.tgt, F),
                            tuple(x.c3[F.f0[i]] for i in range(F.dom.n0)))
    raise TypeError(type(x))


# ---------------------------------------------------------------------------
# generalized interchangers (p: S => T: B -> C, j: F => G: A -> B)


@dataclass(frozen=True)
class TrimodAdjunction:
    """An adjoint equivalence in a transfor hom: left -| right with unit and counit."""

    left: Trimod
    right: Trimod
    unit: Perturbation
    counit: Perturbation

    def as_adjoint_equivalence(self) -> AdjointEquivalence:
        return AdjointEquivalence(self.left, self.right, self.unit, self.counit)


@lru_cache(maxsize=1 << 16)
def interchanger_trinat(p: Trinat, j: Trinat) -> TrimodAdjunction:
    """p_j: p_G.Sj => Tj.p_F together with p_j*, unit and counit."""
    S, T = p.src, p.tgt
    F, G = j.src, j.tgt
    _need(F.cod is S.dom or F.cod == S.dom, "interchanger_trinat: j does not land in p's domain")
    A, B, C = F.dom, S.dom, S.cod
    pidx = B.pair_index
    Sj, Tj = whisker_functor(S, j), whisker_functor(T, j)
    pF, pG = restrict_functor(p, F), restrict_functor(p, G)
    P, Q = compose_trinat(pG, Sj), compose_trinat(Tj, pF)
    c2 = tuple(p.adj[j.comp[x]].left for x in range(A.n0))
    c3 = []
    for f, (x, y) in enumerate(A.one):
        jf = j.adj[f].left
        jx, jy = j.comp[x], j.comp[y]
        Gf, Ff = G.f1[f], F.f1[f]
        k1 = pidx[(Gf, jx)]
        k2 = pidx[(jy, Ff)]
        e = vchain(
            HComp3(p.compositor[k1], Id3(C.wl2(p.comp[G.f0[y]], S.f2[jf]))),
            p.local[jf],
            HComp3(Id3(C.wr2(T.f2[jf], p.comp[F.f0[x]])), Inverse3(p.compositor[k2])),
        )
        c3.append(evaluate_pasting(C, e, f"p_j.c3[{f}]"))
    left = Trimod(P, Q, c2, tuple(c3))
    right = _trimod_right_adjoint(left, [p.adj[j.comp[x]] for x in range(A.n0)])
    unit = Perturbation(identity_trimod(P), vcompose_trimod(right, left),
                        tuple(p.adj[j.comp[x]].unit for x in range(A.n0)))
    counit = Perturbation(vcompose_trimod(left, right), identity_trimod(Q),
                          tuple(p.adj[j.comp[x]].counit for x in range(A.n0)))
    return TrimodAdjunction(left, right, unit, counit)


def _trimod_right_adjoint(s: Trimod, adjs) -> Trimod:
    """Right adjoint of a trimodification whose 2-cell components are the left
    adjoints in ``adjs``; its 3-cells are pasted from s_f^-1 with the inverse
    unit and counit."""
    A, C = s.dom, s.cod
    P, Q = s.src, s.tgt
    G, F = P.tgt, P.src
    c2 = tuple(a.right for a in adjs)
    c3 = []
    for f, (x, y) in enumerate(A.one):
        rx, ry = adjs[x].right, adjs[y].right
        Gf, Ff = G.f1[f], F.f1[f]
        e = vchain(
            HComp3(Id3(C.v2(C.wl2(Gf, rx), Q.adj[f].left)),
                   Whisk3R(Inverse3(adjs[y].counit), Ff)),
            hchain(Id3(C.wl2(Gf, rx)), Inverse3(s.c3[f]), Id3(C.wr2(ry, Ff))),
            HComp3(Whisk3L(Gf, Inverse3(adjs[x].unit)),
                   Id3(C.v2(P.adj[f].left, C.wr2(ry, Ff)))),
        )
        c3.append(evaluate_pasting(C, e, f"p_j*.c3[{f}]"))
    return Trimod(Q, P, c2, tuple(c3))


def unitor_perturbation(p: Trinat, F: GrayFunctor) -> Perturbation:
    """1 => p_{1_F}, with component p^{FX} at X."""
    j = identity_trinat(F)
    pj = interchanger_trinat(p, j).left
    A = F.dom
    return Perturbation(identity_trimod(pj.src), pj,
                        tuple(p.unitor[F.f0[x]] for x in range(A.n0)))


def compositor_perturbation(p: Trinat, j2: Trinat, j: Trinat) -> Perturbation:
    """(Tj2.p_j)(p_j2.Sj) => p_{j2 j}, with component the compositor of p at (j2_X, j_X)."""
    _need(j.tgt == j2.src, "compositor_perturbation: j2 does not follow j")
    S, T = p.src, p.tgt
    A, B = j.dom, p.dom
    pj = interchanger_trinat(p, j).left
    pj2 = interchanger_trinat(p, j2).left
    pjj = interchanger_trinat(p, compose_trinat(j2, j)).left
    src = vcompose_trimod(whisker_trimod_left(whisker_functor(T, j2), pj),
                          whisker_trimod_right(pj2, whisker_functor(S, j)))
    comps = tuple(p.compositor[B.pair_index[(j2.comp[x], j.comp[x])]] for x in range(A.n0))
    return Perturbation(src, pjj, comps)


def perturbation_p_alpha(p: Trinat, alpha: Trimod) -> Perturbation:
    """p_alpha: p_k(p_G.S alpha) => (T alpha.p_F)p_j for alpha: j => k."""
    j, k = alpha.src, alpha.tgt
    S, T = p.src, p.tgt
    G, F = j.tgt, j.src
    pk = interchanger_trinat(p, k).left
    pj = interchanger_trinat(p, j).left
    src = vcompose_trimod(pk, whisker_trimod_left(restrict_functor(p, G), whisker_functor(S, alpha)))
    tgt = vcompose_trimod(whisker_trimod_right(whisker_functor(T, alpha), restrict_functor(p, F)), pj)
    return Perturbation(src, tgt, tuple(p.local[a] for a in alpha.c2))


def perturbation_sigma_j(s: Trimod, j: Trinat) -> Perturbation:
    """s_j: (Tj.s_F)p_j => q_j(s_G.Sj) for s: p => q and j: F => G."""
    p, q = s.src, s.tgt
    S, T = p.src, p.tgt
    F, G = j.src, j.tgt
    pj = interchanger_trinat(p, j).left
    qj = interchanger_trinat(q, j).left
    src = vcompose_trimod(whisker_trimod_left(whisker_functor(T, j), restrict_functor(s, F)), pj)
    tgt = vcompose_trimod(qj, whisker_trimod_right(restrict_functor(s, G), whisker_functor(S, j)))
    return Perturbation(src, tgt, tuple(s.c3[c] for c in j.comp))


# ---------------------------------------------------------------------------
# whiskering a hom by a transfor: Tricat(A, -)


class HomCells:
    """A tabulated view of a transfor hom: maps between cell ids and values.

    ``values[d][i]`` is the transfor of the i-th d-cell and ``index[d]`` the
    reverse map.  ``gray`` is the tabulated Gray-category."""

    def __init__(self, gray, values):
        self.gray = gray
        self.values = values
        self.index = [{v: i for i, v in enumerate(vs)} for vs in values]

    def id_of(self, d, v):
        try:
            return self.index[d][v]
        except KeyError:
            raise CellLookupError((d, v)) from None


def whisker_functor_functor(A_hom: HomCells, C_hom: HomCells, S: GrayFunctor) -> GrayFunctor:
    """Tricat(A, S): [A,B] -> [A,C], X |-> S.X, as a functor between tabulated homs."""
    maps = []
    for d in range(4):
        maps.append(tuple(C_hom.id_of(d, whisker_functor(S, v)) for v in A_hom.values[d]))
    return GrayFunctor(A_hom.gray, C_hom.gray, *maps)


def whisker_functor_trinat(A_hom: HomCells, C_hom: HomCells, p: Trinat) -> Trinat:
    """Tricat(A, p): Tricat(A, S) => Tricat(A, T) between tabulated homs."""
    S, T = p.src, p.tgt
    AS = whisker_functor_functor(A_hom, C_hom, S)
    AT = whisker_functor_functor(A_hom, C_hom, T)
    objs, ones, twos = A_hom.values[0], A_hom.values[1], A_hom.values[2]
    D = A_hom.gray
    cid = C_hom.id_of
    comp = tuple(cid(1, restrict_functor(p, F)) for F in objs)
    adj = []
    for j in ones:
        ad = interchanger_trinat(p, j)
        adj.append(AdjointEquivalence(cid(2, ad.left), cid(2, ad.right),
                                      cid(3, ad.unit), cid(3, ad.counit)))
    local = tuple(cid(3, perturbation_p_alpha(p, a)) for a in twos)
    unitor = tuple(cid(3, unitor_perturbation(p, F)) for F in objs)
    compositor = tuple(cid(3, compositor_perturbation(p, ones[j2], ones[j1]))
                       for (j2, j1) in D.composable_pairs)
    return Trinat(AS, AT, comp, tuple(adj), local, unitor, compositor)


def whisker_functor_trimod(A_hom: HomCells, C_hom: HomCells, s: Trimod) -> Trimod:
    """Tricat(A, s): components s_F and s_j."""
    src = whisker_functor_trinat(A_hom, C_hom, s.src)
    tgt = whisker_functor_trinat(A_hom, C_hom, s.tgt)
    cid = C_hom.id_of
    c2 = tuple(cid(2, restrict_functor(s, F)) for F in A_hom.values[0])
    c3 = tuple(cid(3, perturbation_sigma_j(s, j)) for j in A_hom.values[1])
    return Trimod(src, tgt, c2, c3)


def whisker_functor_pert(A_hom: HomCells, C_hom: HomCells, W: Perturbation) -> Perturbation:
    """Tricat(A, W): component W_F."""
    src = whisker_functor_trimod(A_hom, C_hom, W.src)
    tgt = whisker_functor_trimod(A_hom, C_hom, W.tgt)
    return Perturbation(src, tgt, tuple(C_hom.id_of(3, restrict_functor(W, F))
                                        for F in A_hom.values[0]))


def whisker_functor_trimod_and_pert(A_hom: HomCells, C_hom: HomCells, x):
    if isinstance(x, Trimod):
        return whisker_functor_trimod(A_hom, C_hom, x)
    return whisker_functor_pert(A_hom, C_hom, x)


# ---------------------------------------------------------------------------
# the associativity comparison


def functoriality_sides(p: Trinat, r: Trinat, j: Trinat) -> tuple:
    """Two constructions of the interchanger of p r with j, for r: R => S,
    p: S => T and j: F => G.

    The first is (p r)_j; the second composes the whiskering of r_j by p_G
    with the whiskering of p_j by r_F."""
    lhs = interchanger_trinat(compose_trinat(p, r), j).left
    pG = restrict_functor(p, j.tgt)
    rF = restrict_functor(r, j.src)
    rhs = vcompose_trimod(whisker_trimod_right(interchanger_trinat(p, j).left, rF),
                          whisker_trimod_left(pG, interchanger_trinat(r, j).left))
    return lhs, rhs


@dataclass(frozen=True)
class AssociativityVerdict:
    w_p_j: Perturbation           # (w_p)_j
    w_of_p_j: Perturbation        # w_(p_j)
    equal: bool
    reason: str


def associativity_witnesses(w: Trinat, p: Trinat, j: Trinat) -> AssociativityVerdict:
    """Compare (w_p)_j with w_(p_j) for j: F => G, p: S => T, w: U => V."""
    wp = interchanger_trinat(w, p).left
    left = perturbation_sigma_j(wp, j)
    pj = interchanger_trinat(p, j).left
    right = perturbation_p_alpha(w, pj)
    if left.src != right.src or left.tgt != right.tgt:
        return AssociativityVerdict(left, right, False, "boundary mismatch")
    if left.c3 != right.c3:
        return AssociativityVerdict(left, right, False, "components differ")
    return AssociativityVerdict(left, right, True, "equal")
