"""Backtracking enumeration of transfors over a tabulated codomain.

Candidates for each component slot are drawn in increasing cell order and
every law instance is evaluated as soon as the slots it reads are filled,
so the output is complete, duplicate-free and lexicographically ordered.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import CellLookupError, GrayCategory
from .transfors import (
    AdjointEquivalence, GrayFunctor, Perturbation, Trimod, Trinat, eval_law,
    functor_laws, perturbation_laws, trimod_boundary, trimod_laws, trinat_boundaries,
    trinat_laws,
)


class SizeError(RuntimeError):
    """Raised when an enumeration or construction exceeds its cap."""


class _Partial:
    def __init__(self, names):
        for n in names:
            setattr(self, n, {})


def backtrack(slots, laws, names, B, limit=None):
    """Yield complete assignments as dicts of dicts.

    ``slots`` is an ordered list of (name, index, candidates) where
    ``candidates(partial)`` returns an iterable of values."""
    order = {(n, i): k for k, (n, i, _) in enumerate(slots)}
    at = [[] for _ in slots]
    for law in laws:
        k = max(order[tuple(s)] for s in law.needs)
        at[k].append(law)
    part = _Partial(names)
    count = 0

    def rec(k):
        nonlocal count
        if k == len(slots):
            count += 1
            if limit is not None and count > limit:
                raise SizeError(f"more than {limit} solutions")
            yield {n: dict(getattr(part, n)) for n in names}
            return
        name, idx, cands = slots[k]
        tab = getattr(part, name)
        for v in cands(part):
            tab[idx] = v
            if all(eval_law(l, B, part) is None for l in at[k]):
                yield from rec(k + 1)
        tab.pop(idx, None)

    yield from rec(0)


def _cells(B, d, s, t):
    """Cells of dimension d from s to t in increasing order."""
    if isinstance(B, GrayCategory):
        table = (B.ones_between, B.twos_between, B.threes_between)[d - 1]
        return table.get((s, t), [])
    return [c for c in B.cells(d) if B.src(d, c) == s and B.tgt(d, c) == t]


def _invertible(B, A):
    try:
        B.inv3(A)
        return True
    except CellLookupError:
        return False


def adjoint_equivalences(B, s, t) -> list:
    """All adjoint equivalences with left adjoint a 2-cell s => t."""
    out = []
    for l in _cells(B, 2, s, t):
        for r in _cells(B, 2, t, s):
            rl, lr = B.v2(r, l), B.v2(l, r)
            units = [u for u in _cells(B, 3, B.i2(s), rl) if _invertible(B, u)]
            if not units:
                continue
            counits = [e for e in _cells(B, 3, lr, B.i2(t)) if _invertible(B, e)]
            for u, e in product(units, counits):
                if (B.v3(B.h3(e, B.i3(l)), B.h3(B.i3(l), u)) == B.i3(l)
                        and B.v3(B.h3(B.i3(r), e), B.h3(u, B.i3(r))) == B.i3(r)):
                    out.append(AdjointEquivalence(l, r, u, e))
    return out


def _adj_key(a):
    return (a.left, a.right, a.unit, a.counit)


# ---------------------------------------------------------------------------


def enumerate_functors(A: GrayCategory, B: GrayCategory, limit=None) -> list:
    n0, n1, n2, n3 = A.counts()
    slots = [("f0", x, lambda part: range(B.n0)) for x in range(n0)]
    for f, (x, y) in enumerate(A.one):
        slots.append(("f1", f, lambda part, x=x, y=y:
                      _cells(B, 1, part.f0[x], part.f0[y])))
    for a, (s, t) in enumerate(A.two):
        slots.append(("f2", a, lambda part, s=s, t=t: _cells(B, 2, part.f1[s], part.f1[t])))
    for W, (s, t) in enumerate(A.three):
        slots.append(("f3", W, lambda part, s=s, t=t: _cells(B, 3, part.f2[s], part.f2[t])))
    laws = [l for l in functor_laws(A, B) if not l.structural]
    out = []
    for sol in backtrack(slots, laws, ("f0", "f1", "f2", "f3"), B, limit):
        out.append(GrayFunctor(A, B, *(tuple(sol[k][i] for i in range(len(sol[k])))
                                       for k in ("f0", "f1", "f2", "f3"))))
    return out


def enumerate_trinats(F: GrayFunctor, G: GrayFunctor, filter=None, limit=None) -> list:
    """All trinatural transformations F => G.

    ``filter`` may be None, 'unital', 'compositional' or 'semi-strict'; it
    restricts unitors and/or compositors to identities during the search."""
    A, B = F.dom, F.cod
    unital = filter in ("unital", "semi-strict")
    compositional = filter in ("compositional", "semi-strict")
    adj_cache = {}

    def adjs(s, t):
        if (s, t) not in adj_cache:
            adj_cache[(s, t)] = sorted(adjoint_equivalences(B, s, t), key=_adj_key)
        return adj_cache[(s, t)]

    slots = [("comp", X, lambda part, X=X: _cells(B, 1, F.f0[X], G.f0[X])) for X in range(A.n0)]
    for f in range(len(A.one)):
        def c_adj(part, f=f):
            s, t = trinat_boundaries(B, F, G, A, part, "adj", f)
            return adjs(s, t)
        slots.append(("adj", f, c_adj))

    def threes(kind, i, ident):
        def c(part):
            s, t = trinat_boundaries(B, F, G, A, part, kind, i)
            if ident:
                return [B.i3(s)] if s == t else []
            return [W for W in _cells(B, 3, s, t) if _invertible(B, W)]
        return c

    for a in range(len(A.two)):
        slots.append(("local", a, threes("local", a, False)))
    for X in range(A.n0):
        slots.append(("unitor", X, threes("unitor", X, unital)))
    for k in range(len(A.composable_pairs)):
        slots.append(("compositor", k, threes("compositor", k, compositional)))
    laws = [l for l in trinat_laws(A, B, F, G) if not l.structural]
    names = ("comp", "adj", "local", "unitor", "compositor")
    out = []
    for sol in backtrack(slots, laws, names, B, limit):
        out.append(Trinat(F, G, *(tuple(sol[n][i] for i in range(len(sol[n]))) for n in names)))
    return out


def enumerate_trimods(p: Trinat, q: Trinat, limit=None) -> list:
    A, B = p.dom, p.cod
    slots = [("c2", X, lambda part, X=X: _cells(B, 2, p.comp[X], q.comp[X])) for X in range(A.n0)]
    for f in range(len(A.one)):
        def c(part, f=f):
            s, t = trimod_boundary(B, p, q, part, f, A)
            return [W for W in _cells(B, 3, s, t) if _invertible(B, W)]
        slots.append(("c3", f, c))
    laws = [l for l in trimod_laws(A, B, p, q) if not l.structural]
    out = []
    for sol in backtrack(slots, laws, ("c2", "c3"), B, limit):
        out.append(Trimod(p, q, tuple(sol["c2"][X] for X in range(A.n0)),
                          tuple(sol["c3"][f] for f in range(len(A.one)))))
    return out


def enumerate_perturbations(s: Trimod, t: Trimod, limit=None) -> list:
    A, B = s.dom, s.cod
    slots = [("c3", X, lambda part, X=X: _cells(B, 3, s.c2[X], t.c2[X])) for X in range(A.n0)]
    laws = [l for l in perturbation_laws(A, B, s, t) if not l.structural]
    return [Perturbation(s, t, tuple(sol["c3"][X] for X in range(A.n0)))
            for sol in backtrack(slots, laws, ("c3",), B, limit)]


@dataclass(frozen=True)
class EnumerationFilter:
    """Optional restriction of enumerated trinats."""

    trinats: str | None = None      # None, 'unital', 'compositional', 'semi-strict'


def enumerate_transfors(A, B, level: int, filter=None, between=None, limit=None) -> list:
    """Uniform entry point: level 0 functors, 1 trinats, 2 trimods, 3 perturbations.

    For level >= 1 ``between`` is the (source, target) pair of the level below;
    when omitted, every pair is enumerated."""
    if level == 0:
        return enumerate_functors(A, B, limit)
    if between is not None:
        s, t = between
        if level == 1:
            return enumerate_trinats(s, t, filter, limit)
        if level == 2:
            return enumerate_trimods(s, t, limit)
        return enumerate_perturbations(s, t, limit)
    below = enumerate_transfors(A, B, level - 1, filter, None, limit)
    out = []
    for s in below:
        for t in below:
            if level > 1 and (s.src != t.src or s.tgt != t.tgt):
                continue
            out += enumerate_transfors(A, B, level, filter, (s, t), limit)
            if limit is not None and len(out) > limit:
                raise SizeError(f"more than {limit} transfors of level {level}")
    return out
