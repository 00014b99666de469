"""Gray-monoids and their generalized centres.

A Gray-monoid is a 2-category K with a semistrict tensor; it is the same
data as a one-object Gray-category, read one dimension down:

    objects of K   = 1-cells,      X (+) Y = comp1(X, Y)
    arrows of K    = 2-cells,      X (+) g = whisk2L(X, g), g (+) X = whisk2R(g, X)
    2-cells of K   = 3-cells.

The centre Z(K) has as objects the unital trinats 1 => 1 on the suspension,
as morphisms the trimodifications and as 2-cells the perturbations between
them.  Tensor is composition of trinats and the braid structure comes from
the generalized interchangers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .calculus import (
    compose_trinat, compositor_perturbation, functoriality_sides, interchanger_trinat,
    perturbation_p_alpha, perturbation_sigma_j,
)
from .core import CellLookupError, GrayCategory, validate_gray_category
from .report import ValidationReport
from .search import SizeError, enumerate_perturbations, enumerate_trimods, enumerate_trinats
from .transfors import (
    Perturbation, Trimod, Trinat, check_perturbation, check_trimodification, check_trinatural,
    classify_strictness, identity_functor, identity_trinat,
)


@dataclass
class GrayMonoid:
    """Tables of a Gray-monoid, named in monoidal terms."""

    name: str
    objects: int
    arrows: list               # arrow -> (source object, target object)
    twocells: list             # 2-cell -> (source arrow, target arrow)
    unit: int
    tensor: dict               # (X, Y) -> X (+) Y
    id_arrow: list             # object -> identity arrow
    vcomp: dict                # (g2, g) -> g2 g
    tensor_left: dict          # (X, g) -> X (+) g
    tensor_right: dict         # (g, X) -> g (+) X
    id_twocell: list           # arrow -> identity 2-cell
    vcomp_twocell: dict
    hcomp_twocell: dict
    tensor_left_twocell: dict  # (X, phi) -> X (+) phi
    tensor_right_twocell: dict
    interchanger: dict         # (g, h) -> 2-cell from (h (+) Y')(X (+) g) to ...
    inverses: dict = field(default_factory=dict)

    def counts(self) -> tuple:
        return (self.objects, len(self.arrows), len(self.twocells))


def suspend(m: GrayMonoid) -> GrayCategory:
    """The one-object Gray-category of a Gray-monoid."""
    return GrayCategory(
        name=m.name, n0=1,
        one=[(0, 0)] * m.objects, two=list(m.arrows), three=list(m.twocells),
        id1=[m.unit], comp1=dict(m.tensor), id2=list(m.id_arrow), vcomp2=dict(m.vcomp),
        whisk2L=dict(m.tensor_left), whisk2R=dict(m.tensor_right),
        id3=list(m.id_twocell), vcomp3=dict(m.vcomp_twocell), hcomp3=dict(m.hcomp_twocell),
        whisk3L=dict(m.tensor_left_twocell), whisk3R=dict(m.tensor_right_twocell),
        interchanger=dict(m.interchanger), inverses3=dict(m.inverses),
    )


def unsuspend(g: GrayCategory) -> GrayMonoid:
    if g.n0 != 1:
        raise ValueError(f"{g.name} has {g.n0} objects; a Gray-monoid needs one")
    return GrayMonoid(
        name=g.name, objects=len(g.one), arrows=list(g.two), twocells=list(g.three),
        unit=g.id1[0], tensor=dict(g.comp1), id_arrow=list(g.id2), vcomp=dict(g.vcomp2),
        tensor_left=dict(g.whisk2L), tensor_right=dict(g.whisk2R),
        id_twocell=list(g.id3), vcomp_twocell=dict(g.vcomp3), hcomp_twocell=dict(g.hcomp3),
        tensor_left_twocell=dict(g.whisk3L), tensor_right_twocell=dict(g.whisk3R),
        interchanger=dict(g.interchanger), inverses=dict(g.inverses3),
    )


# ---------------------------------------------------------------------------
# centre cells in monoidal terms


@dataclass(frozen=True)
class CentreObject:
    """(X, beta^X, r^X): the braidings beta_Y^X as adjoint equivalences, the
    2-cells beta_g^X and the right Reidemeister cells r_{Y,Z}^X."""

    X: int
    braiding: tuple
    local: tuple
    reidemeister: dict

    @classmethod
    def from_trinat(cls, p: Trinat) -> "CentreObject":
        K = p.dom
        return cls(p.comp[0], p.adj, p.local,
                   {pair: p.compositor[k] for k, pair in enumerate(K.composable_pairs)})

    def to_trinat(self, K: GrayCategory) -> Trinat:
        one = identity_functor(K)
        return Trinat(one, one, (self.X,), tuple(self.braiding), tuple(self.local),
                      (K.i3(K.i2(self.X)),),
                      tuple(self.reidemeister[pair] for pair in K.composable_pairs))


@dataclass
class Centre:
    monoid: GrayMonoid
    K: GrayCategory
    objects: list
    morphisms: list
    cells: list
    chosen: list = None     # objects whose braid data is computed

    def __post_init__(self):
        if self.chosen is None:
            self.chosen = self.objects

    def tensor(self, q: Trinat, p: Trinat) -> Trinat:
        return compose_trinat(q, p)

    def braid(self, X: Trinat, Y: Trinat) -> Trimod:
        """beta_{X,Y}: X (+) Y => Y (+) X."""
        return interchanger_trinat(X, Y).left

    def braid_object_morphism(self, X: Trinat, f: Trimod) -> Perturbation:
        return perturbation_p_alpha(X, f)

    def braid_morphism_object(self, f: Trimod, Y: Trinat) -> Perturbation:
        return perturbation_sigma_j(f, Y)

    def right_reidemeister(self, X: Trinat, Z: Trinat, Y: Trinat) -> Perturbation:
        return compositor_perturbation(X, Z, Y)

    def left_reidemeister_sides(self, X: Trinat, Y: Trinat, Z: Trinat) -> tuple:
        """beta_{X (+) Y, Z} and the composite (beta_{X,Z} (+) Y)(X (+) beta_{Y,Z})."""
        return functoriality_sides(X, Y, Z)


DEFAULT_CENTRE_CAPS = (64, 1024, 4096)


def centre(m: GrayMonoid, caps=DEFAULT_CENTRE_CAPS, ssg_only: bool = False,
           sample: int | None = None, seed: int = 0) -> Centre:
    """Enumerate Z(K).

    With ``ssg_only`` objects are restricted to composites of semi-strict
    trinats.  With ``sample`` all objects are still enumerated (and checked),
    but morphisms and 2-cells are only computed among ``sample`` objects drawn
    with ``seed``; the unit object is always among them."""
    K = suspend(m)
    one = identity_functor(K)
    objs = enumerate_trinats(one, one, "unital", limit=None if sample else caps[0])
    if ssg_only:
        from .closed import ssg_closure
        gens = [p for p in objs if classify_strictness(p).semi_strict]
        objs = [p for p in objs if p in ssg_closure(gens, caps[0])]
    chosen = objs
    if sample is not None and sample < len(objs):
        unit = identity_trinat(one)
        rest = [p for p in objs if p != unit]
        chosen = [p for p in objs if p == unit] + random.Random(seed).sample(rest, sample - 1)
    mors = []
    for p, q in product(chosen, repeat=2):
        mors += enumerate_trimods(p, q, limit=caps[1])
        if len(mors) > caps[1]:
            raise SizeError(f"centre of {m.name}: more than {caps[1]} morphisms")
    cells = []
    for s, t in product(mors, repeat=2):
        if s.src == t.src and s.tgt == t.tgt:
            cells += enumerate_perturbations(s, t, limit=caps[2])
            if len(cells) > caps[2]:
                raise SizeError(f"centre of {m.name}: more than {caps[2]} 2-cells")
    return Centre(m, K, objs, mors, cells, chosen)


# ---------------------------------------------------------------------------
# the component dictionary, evaluated with the monoid's own tables


def _direct_braid(m: GrayMonoid, X: CentreObject, Y: CentreObject) -> tuple:
    """Components of beta_{X,Y}: the arrow beta_Y^X and, at each object Z,
    the 2-cell (beta_Z^Y (+) X)(r^X_{Y,Z})^-1 . beta^X_{beta_Z^Y} . r^X_{Z,Y} (X (+) beta_Z^Y)."""
    def ident(g):
        return m.id_twocell[g]

    def vc(B, A):
        return m.vcomp_twocell[(B, A)]

    def hc(B, A):
        return m.hcomp_twocell[(B, A)]

    c2 = (X.braiding[Y.X].left,)
    c3 = []
    for Z in range(m.objects):
        bYZ = Y.braiding[Z].left
        first = hc(X.reidemeister[(Z, Y.X)], ident(m.tensor_left[(X.X, bYZ)]))
        second = X.local[bYZ]
        third = hc(ident(m.tensor_right[(bYZ, X.X)]), m.inverses[X.reidemeister[(Y.X, Z)]])
        c3.append(vc(third, vc(second, first)))
    return c2, tuple(c3)


def check_centre_correspondence(m: GrayMonoid, Z: Centre | None = None,
                                cap: int = 100) -> ValidationReport:
    """Compare the braid structure from interchangers with the component
    dictionary, check every centre cell, unitality and the left Reidemeister."""
    r = ValidationReport(cap=cap)
    K = suspend(m)
    rep = validate_gray_category(K)
    if not rep.ok:
        r.merge(rep, prefix="monoid.")
        return r
    Z = Z or centre(m)
    K = Z.K
    one = identity_functor(K)
    unit = m.unit
    for i, X in enumerate(Z.objects):
        rep = check_trinatural(one, one, X)
        if not rep.ok:
            r.merge(rep, prefix=f"object[{i}].")
            continue
        if X.adj[unit].left != K.i2(X.comp[0]):
            r.axiom("unital", (i,), "beta_I^X is not the identity")
    if len(set(Z.objects)) != len(Z.objects):
        r.structural("centre.objects", (), "duplicate object")
    chosen = set(Z.chosen)
    for i, f in enumerate(Z.morphisms):
        if f.src not in chosen or f.tgt not in chosen:
            r.structural("centre.morphism-ends", (i,), "endpoint is not a centre object")
    mors = set(Z.morphisms)
    for i, W in enumerate(Z.cells):
        if W.src not in mors or W.tgt not in mors:
            r.structural("centre.cell-ends", (i,), "boundary is not a centre morphism")
    valid = [X for X in Z.chosen if check_trinatural(one, one, X).ok]
    for i, f in enumerate(Z.morphisms):
        rep = check_trimodification(f.src, f.tgt, f)
        if not rep.ok:
            r.merge(rep, prefix=f"morphism[{i}].")
    for i, W in enumerate(Z.cells):
        rep = check_perturbation(W.src, W.tgt, W)
        if not rep.ok:
            r.merge(rep, prefix=f"cell[{i}].")
    if not r.ok:
        return r
    idx = {X: i for i, X in enumerate(Z.objects)}
    for X, Y in product(valid, repeat=2):
        cells = (idx[X], idx[Y])
        try:
            b = Z.braid(X, Y)
        except CellLookupError as exc:
            r.axiom("braid.lookup", cells, str(exc))
            continue
        if not check_trimodification(b.src, b.tgt, b).ok:
            r.axiom("braid.trimodification", cells)
        if (b.c2, b.c3) != _direct_braid(m, CentreObject.from_trinat(X), CentreObject.from_trinat(Y)):
            r.axiom("braid.dictionary", cells)
    for X, f in product(valid, Z.morphisms):
        W = Z.braid_object_morphism(X, f)
        if W.c3 != (X.local[f.c2[0]],) or not check_perturbation(W.src, W.tgt, W).ok:
            r.axiom("braid.object-morphism", (idx[X], Z.morphisms.index(f)))
    for f, Y in product(Z.morphisms, valid):
        W = Z.braid_morphism_object(f, Y)
        if W.c3 != (f.c3[Y.comp[0]],) or not check_perturbation(W.src, W.tgt, W).ok:
            r.axiom("braid.morphism-object", (Z.morphisms.index(f), idx[Y]))
    for X, Y, W in product(valid, repeat=3):
        cells = (idx[X], idx[Y], idx[W])
        R = Z.right_reidemeister(X, W, Y)
        want = (X.compositor[K.pair_index[(W.comp[0], Y.comp[0])]],)
        if R.c3 != want or not check_perturbation(R.src, R.tgt, R).ok:
            r.axiom("reidemeister.right", cells)
        lhs, rhs = Z.left_reidemeister_sides(X, Y, W)
        if lhs != rhs:
            r.axiom("reidemeister.left", cells)
    return r


def mutate_centre(Z: Centre, i: int, kind: str, key, value) -> Centre:
    """A copy of Z whose i-th object has one braid datum replaced.

    ``kind`` is 'braiding' (key an object Y, value an AdjointEquivalence),
    'local' (key an arrow g) or 'reidemeister' (key a pair (Y, Z))."""
    X = CentreObject.from_trinat(Z.objects[i])
    data = {"braiding": list(X.braiding), "local": list(X.local), "reidemeister": dict(X.reidemeister)}
    data[kind][key] = value
    bad = CentreObject(X.X, tuple(data["braiding"]), tuple(data["local"]),
                       data["reidemeister"]).to_trinat(Z.K)
    objs = list(Z.objects)
    objs[i] = bad
    chosen = [bad if X == Z.objects[i] else X for X in Z.chosen]
    return Centre(Z.monoid, Z.K, objs, Z.morphisms, Z.cells, chosen)


def braid_mutations(Z: Centre):
    """Every single-datum mutation of the chosen objects that keeps boundaries:
    yields (object index, kind, key, value)."""
    K = Z.K
    from .search import adjoint_equivalences
    for i, X in enumerate(Z.objects):
        if X not in Z.chosen:
            continue
        for y, a in enumerate(X.adj):
            for b in adjoint_equivalences(K, K.two[a.left][0], K.two[a.left][1]):
                if b != a:
                    yield i, "braiding", y, b
        for g, c in enumerate(X.local):
            for d in K.cells(3):
                if d != c and K.three[d] == K.three[c]:
                    yield i, "local", g, d
        for k, pair in enumerate(K.composable_pairs):
            c = X.compositor[k]
            for d in K.cells(3):
                if d != c and K.three[d] == K.three[c]:
                    yield i, "reidemeister", pair, d
