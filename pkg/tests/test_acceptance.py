"""Acceptance criteria 1-10.

Each criterion is a function returning ``(ok, detail)``; the tests print one
PASS/FAIL line per criterion (visible with ``-s`` or in the terminal summary)
and assert ``ok``.  Run ``python3 tests/test_acceptance.py`` for the lines
alone.  Criteria 3 and 6 are stated more strongly than what holds on the
shipped fixtures; they report the counterexamples and fail.
"""

from __future__ import annotations

import io
import os
import random
import sys
import time
from contextlib import redirect_stdout
from itertools import islice, product

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from graycat.calculus import (  # noqa: E402
    compose_trinat, compositor_perturbation, hcompose_pert, interchanger_trimods,
    interchanger_trinat, inverse_pert, perturbation_p_alpha, perturbation_sigma_j,
    unitor_perturbation, vcompose_pert, vcompose_trimod, whisker_functor_functor,
    whisker_functor_pert, whisker_functor_trimod, whisker_functor_trinat, whisker_pert_left,
    whisker_pert_right, whisker_trimod_left, whisker_trimod_right,
)
from graycat.centre import (  # noqa: E402
    braid_mutations, centre, check_centre_correspondence, mutate_centre, unsuspend,
)
from graycat.cli import main as cli_main  # noqa: E402
from graycat.closed import (  # noqa: E402
    HomBuildConfig, build_hom, check_closed_axioms, check_constant_assigners, check_functoriality,
    check_normal_closed_inclusion,
)
from graycat.core import ONE, validate_gray_category  # noqa: E402
from graycat.fileformat import (  # noqa: E402
    parse_category, parse_monoid, parse_transfor, print_category, print_monoid, print_transfor,
    same_tables,
)
from graycat.fixtures import FIXTURES, fixture  # noqa: E402
from graycat.search import (  # noqa: E402
    SizeError, enumerate_functors, enumerate_perturbations, enumerate_trimods, enumerate_trinats,
)
from graycat.transfors import (  # noqa: E402
    check_gray_functor, check_perturbation, check_trimodification, check_trinatural,
    classify_strictness, identity_functor, identity_perturbation, identity_trimod, identity_trinat,
    is_strict_trimod,
)

from helpers import mutate, mutation_sample  # noqa: E402
from oracle import criterion_interchanger, naive_is_gray  # noqa: E402

RESULTS: dict = {}


def _line(n, ok, detail, secs):
    return f"ACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'} ({secs:.1f}s) {detail}"


def _run(n, fn):
    t = time.time()
    ok, detail = fn()
    line = _line(n, ok, detail, time.time() - t)
    RESULTS[n] = line
    print(line)
    return ok, line


def _is_id_pert(W):
    return W == identity_perturbation(W.src)


# -- 1. validator soundness ------------------------------------------------------------

def criterion_1():
    t = time.time()
    bad_fixtures = [n for n in FIXTURES if not validate_gray_category(fixture(n)).ok]
    required = {"terminal", "strict_z3", "braided_z2"} <= set(FIXTURES)
    nontrivial_ich = any(not fixture("braided_z2").is_identity(3, c)
                         for c in fixture("braided_z2").interchanger.values())
    detected = valid_mutants = missed = 0
    valid_time = 0.0
    for name, (fld, k, v) in mutation_sample(20, seed=1):
        m = mutate(fixture(name), fld, k, v)
        t0 = time.time()
        rep = validate_gray_category(m)
        valid_time += time.time() - t0
        if rep.ok:
            # an empty report is only acceptable when the mutant really is a Gray-category
            if naive_is_gray(m):
                valid_mutants += 1
            else:
                missed += 1
        else:
            detected += 1
    total = time.time() - t
    ok = (not bad_fixtures and len(FIXTURES) >= 6 and required and nontrivial_ich
          and detected >= 200 and missed == 0 and valid_time < 10)
    return ok, (f"{len(FIXTURES)} fixtures valid={not bad_fixtures}; {detected} mutations detected, "
                f"{valid_mutants} valid mutants, {missed} missed; validator time {valid_time:.1f}s "
                f"(with oracle {total:.1f}s)")


# -- 2. transfor checkers on calculus outputs ----------------------------------------------

def _endo_setups():
    """(B, ps, js): ps trinats on 1_B, js trinats between functors walking_arrow -> B."""
    A = fixture("walking_arrow")
    for Bn in ("braided_z2", "shifted_z2", "walking_z2_3cell", "bz2", "strict_leftzero"):
        B = fixture(Bn)
        S = identity_functor(B)
        ps = enumerate_trinats(S, S, limit=None)
        js = [j for F, G in product(enumerate_functors(A, B), repeat=2) for j in enumerate_trinats(F, G)]
        yield B, ps, js


def criterion_2():
    counts = {}
    fails = []

    def check(kind, rep, what):
        counts[kind] = counts.get(kind, 0) + 1
        if not rep.ok:
            fails.append((kind, what))

    rng = random.Random(0)
    for B, ps, js in _endo_setups():
        P = ps if len(ps) <= 12 else ps[:6] + rng.sample(ps[6:], 6)
        J = js if len(js) <= 12 else js[:6] + rng.sample(js[6:], 6)
        for q, p in product(P, P):
            r = compose_trinat(q, p)
            check("compose", check_trinatural(r.src, r.tgt, r), B.name)
        for k, j in product(J, J):
            if j.tgt == k.src:
                r = compose_trinat(k, j)
                check("compose", check_trinatural(r.src, r.tgt, r), B.name)
        mods = [s for p, q in product(P[:4], P[:4]) for s in islice(enumerate_trimods(p, q), 3)]
        for t, s in product(mods, mods):
            if t.src == s.tgt:
                v = vcompose_trimod(t, s)
                check("vcompose_trimod", check_trimodification(v.src, v.tgt, v), B.name)
        for s, p in product(mods, P[:4]):
            for w in (whisker_trimod_right(s, p), whisker_trimod_left(p, s)):
                check("whisker_trimod", check_trimodification(w.src, w.tgt, w), B.name)
        perts = [W for s in mods[:6] for t in mods[:6] if (s.src, s.tgt) == (t.src, t.tgt)
                 for W in islice(enumerate_perturbations(s, t), 2)]
        for W2, W1 in product(perts, perts):
            if W2.src == W1.tgt:
                V = vcompose_pert(W2, W1)
                check("pert_ops", check_perturbation(V.src, V.tgt, V), B.name)
            if W2.src.src == W1.src.tgt:
                V = hcompose_pert(W2, W1)
                check("pert_ops", check_perturbation(V.src, V.tgt, V), B.name)
        for W, p in product(perts, P[:3]):
            for V in (whisker_pert_left(p, W), whisker_pert_right(W, p), inverse_pert(W)):
                check("pert_ops", check_perturbation(V.src, V.tgt, V), B.name)
        for s, t in product(mods[:6], mods[:6]):
            if t.src.src == s.tgt.tgt:
                V = interchanger_trimods(s, t)
                check("pert_ops", check_perturbation(V.src, V.tgt, V), B.name)
        # p_j and its adjoint data
        for p, j in product(P, J):
            adj = interchanger_trinat(p, j)
            for x in (adj.left, adj.right):
                check("p_j", check_trimodification(x.src, x.tgt, x), B.name)
            for x in (adj.unit, adj.counit):
                check("p_j", check_perturbation(x.src, x.tgt, x), B.name)
        Fs = {j.src for j in J}
        for p, F in product(P, Fs):
            W = unitor_perturbation(p, F)
            check("p^F", check_perturbation(W.src, W.tgt, W), B.name)
        for p, (j2, j) in product(P, [(j2, j) for j2, j in product(J, J) if j.tgt == j2.src]):
            W = compositor_perturbation(p, j2, j)
            check("p_j'j", check_perturbation(W.src, W.tgt, W), B.name)
        for p, j, k in product(P, J, J):
            if (j.src, j.tgt) == (k.src, k.tgt):
                for alpha in islice(enumerate_trimods(j, k), 4):
                    W = perturbation_p_alpha(p, alpha)
                    check("p_alpha", check_perturbation(W.src, W.tgt, W), B.name)
        for s, j in product(mods, J):
            W = perturbation_sigma_j(s, j)
            check("sigma_j", check_perturbation(W.src, W.tgt, W), B.name)
    # Tricat_s(A, -) on every cell of [B, C]
    for A, B, C, caps in ((fixture("walking_arrow"), fixture("bz2"), fixture("strict_leftzero"), None),
                          (ONE, fixture("bz2"), fixture("braided_z2"), (4, 64, 600, 6000))):
        cfg = HomBuildConfig("ssg", caps or (8, 200, 2000, 20000))
        AB, AC, BC = build_hom(A, B, cfg), build_hom(A, C, cfg), build_hom(B, C, cfg)
        for S in BC.values[0]:
            F = whisker_functor_functor(AB, AC, S)
            check("Tricat(A,-)", check_gray_functor(AB.gray, AC.gray, F), BC.gray.name)
        for q in BC.values[1]:
            T = whisker_functor_trinat(AB, AC, q)
            check("Tricat(A,-)", check_trinatural(T.src, T.tgt, T), BC.gray.name)
        for s in BC.values[2]:
            T = whisker_functor_trimod(AB, AC, s)
            check("Tricat(A,-)", check_trimodification(T.src, T.tgt, T), BC.gray.name)
        for W in BC.values[3]:
            T = whisker_functor_pert(AB, AC, W)
            check("Tricat(A,-)", check_perturbation(T.src, T.tgt, T), BC.gray.name)
    total = sum(counts.values())
    detail = f"{total} outputs checked " + " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    if fails:
        detail += f"; {len(fails)} rejected, first {fails[0]}"
    return not fails, detail


# -- 3. degeneracy laws ----------------------------------------------------------------

def criterion_3():
    ex = {"p_j": 0, "sigma_j.strict": 0, "sigma_j.pseudo-icon": 0, "p_alpha": 0}
    n = dict.fromkeys(ex, 0)
    unital_pseudo_ex = 0
    for B, ps, js in _endo_setups():
        S = identity_functor(B)
        i = identity_trinat(S)
        js = js[:12]
        # p identity => p_j = id
        for j in js:
            n["p_j"] += 1
            l = interchanger_trinat(i, j).left
            ex["p_j"] += l != identity_trimod(l.src)
        # sigma_j: every trimod between trinats on 1_B, against every j (pseudo-icons included)
        P = ps[:10]
        for p, q in product(P, P):
            unital = classify_strictness(p).unital and classify_strictness(q).unital
            for s in enumerate_trimods(p, q):
                strict = is_strict_trimod(s)
                for j in js:
                    icon = classify_strictness(j).pseudo_icon
                    if not (strict or icon):
                        continue
                    bad = not _is_id_pert(perturbation_sigma_j(s, j))
                    if strict:
                        n["sigma_j.strict"] += 1
                        ex["sigma_j.strict"] += bad
                    if icon:
                        n["sigma_j.pseudo-icon"] += 1
                        ex["sigma_j.pseudo-icon"] += bad
                        unital_pseudo_ex += bad and unital
        # alpha strict or p locally strict => p_alpha = id
        for p in P:
            ls = classify_strictness(p).locally_strict
            for j, k in product(js, js):
                if (j.src, j.tgt) != (k.src, k.tgt):
                    continue
                for alpha in enumerate_trimods(j, k):
                    if ls or is_strict_trimod(alpha):
                        n["p_alpha"] += 1
                        ex["p_alpha"] += not _is_id_pert(perturbation_p_alpha(p, alpha))
    ok = not any(ex.values())
    detail = " ".join(f"{k}: {ex[k]}/{n[k]} exceptions" for k in ex)
    detail += (f"; pseudo-icon exceptions with unital p and q: {unital_pseudo_ex} "
               "(the unit law gives sigma_1 = q^X (p^X)^-1, so the clause needs unital ends)")
    return ok, detail


# -- 4. semi-strict composition ------------------------------------------------------------

def criterion_4(sample_graded=2000):
    pairs = bad_unital = bad_crit = noncomp = 0
    for name in FIXTURES:
        g = fixture(name)
        Fs = enumerate_functors(g, g)
        triples = list(product(Fs, repeat=3))
        n = None
        if name == "graded_braided_z3":
            Fs = [Fs[0], identity_functor(g)]
            triples = [(F, F, F) for F in Fs]
            n = sample_graded
        ss = {}
        for F, G, H in triples:
            for pr in ((F, G), (G, H)):
                if pr not in ss:
                    ss[pr] = enumerate_trinats(*pr, "semi-strict", limit=None)
            prs = list(product(ss[G, H], ss[F, G]))
            if n is not None and len(prs) > n:
                prs = random.Random(0).sample(prs, n)
            for q, p in prs:
                pairs += 1
                qp = compose_trinat(q, p)
                cls = classify_strictness(qp)
                bad_unital += not cls.unital
                noncomp += not cls.compositional
                for k, (gg, ff) in enumerate(g.composable_pairs):
                    crit = g.is_identity(3, criterion_interchanger(g, q, p, gg, ff))
                    bad_crit += g.is_identity(3, qp.compositor[k]) != crit
    ok = bad_unital == 0 and bad_crit == 0
    return ok, (f"{pairs} composable semi-strict pairs ({noncomp} non-compositional composites); "
                f"non-unital {bad_unital}, criterion mismatches {bad_crit}; graded_braided_z3 sampled "
                f"{sample_graded} per functor (full sweep: scripts/semi_strict_sweep.py)")


# -- 5. closed axioms ----------------------------------------------------------------------

QUADRUPLE = ("terminal", "bz2", "strict_leftzero", "walking_z2_3cell")


def criterion_5():
    cats = [ONE if n == "terminal" else fixture(n) for n in QUADRUPLE]
    s = check_closed_axioms(*cats, HomBuildConfig("ssg", (2, 4, 6, 8)))
    # a braided quadruple where [C, D] has 1-cells whose certificates have two factors
    b = check_closed_axioms(ONE, ONE, fixture("bz2"), fixture("braided_z2"),
                            HomBuildConfig("ssg", (4, 64, 600, 6000), normalized_adjoints=True))
    checked = " ".join(f"{k}={v}" for k, v in s.checked.items())
    detail = (f"{QUADRUPLE} caps (2,4,6,8): {s.report.total} violations, checked {checked}; "
              f"supplementary (1,1,bz2,braided_z2) normalized: {b.report.total} violations, "
              f"{b.checked['axiom5.certificates']} certificate checks")
    return s.report.ok and b.report.ok, detail


# -- 6. [1, A] = A ---------------------------------------------------------------------------

def criterion_6():
    caps = (50, 500, 5000, 50000)
    faithful, normalized = [], []
    for name in FIXTURES:
        A = fixture(name)
        if not check_constant_assigners(A, build_hom(ONE, A, HomBuildConfig("ssg", caps))).ok:
            faithful.append(name)
        O = build_hom(ONE, A, HomBuildConfig("ssg", caps, normalized_adjoints=True))
        if not check_constant_assigners(A, O).ok:
            normalized.append(name)
    detail = (f"round trips fail on {len(faithful)}/{len(FIXTURES)} fixtures {faithful} "
              "(extra unit/counit choices at identity 1-cells); with normalized adjoints "
              f"{len(normalized)} failures")
    return not faithful, detail


# -- 7. functoriality -----------------------------------------------------------------------

FUNCTORIALITY = [("terminal", "bz2", "braided_z2"), ("terminal", "walking_arrow", "strict_leftzero"),
                 ("walking_arrow", "bz2", "strict_leftzero"), ("walking_arrow", "bz2", "bz2"),
                 ("terminal", "strict_leftzero", "strict_z3"), ("terminal", "braided_z2", "shifted_z2"),
                 ("walking_arrow", "walking_arrow", "walking_z2_3cell"),
                 ("terminal", "walking_z2_3cell", "walking_2cell")]


def criterion_7():
    pairs = fails = 0
    skipped = []
    for names in FUNCTORIALITY:
        cats = [ONE if n == "terminal" else fixture(n) for n in names]
        try:
            rep, n = check_functoriality(*cats, HomBuildConfig("ssg", (8, 64, 600, 6000)))
        except SizeError:
            skipped.append(names)
            continue
        pairs += n
        fails += rep.total
    return fails == 0 and pairs > 0, (f"{len(FUNCTORIALITY) - len(skipped)} triples, {pairs} composable "
                                      f"pairs, {fails} violations; skipped (caps) {skipped}")


# -- 8. normal closed functor ------------------------------------------------------------------

def criterion_8():
    cats = [ONE if n == "terminal" else fixture(n) for n in QUADRUPLE]
    total = 0
    for triple in (cats[:3], cats[1:]):
        total += check_normal_closed_inclusion(*triple, (8, 64, 600, 6000)).total
    b = check_normal_closed_inclusion(ONE, fixture("bz2"), fixture("braided_z2"), (8, 64, 600, 6000))
    return total == 0 and b.ok, (f"triples of {QUADRUPLE}: {total} violations; "
                                 f"(1,bz2,braided_z2): {b.total} violations")


# -- 9. centre -----------------------------------------------------------------------------

# a mutation check recomputes the whole centre report, so the larger centres get fewer
MUTATION_BUDGET = {"braided_z2": None, "braided_z3": 40, "shifted_z2": 12}


def criterion_9():
    monoids = [n for n in FIXTURES if fixture(n).n0 == 1]
    bad, muts, missed = [], 0, 0
    for name in monoids:
        m = unsuspend(fixture(name))
        Z = centre(m, sample=8 if name == "graded_braided_z3" else None)
        if not check_centre_correspondence(m, Z).ok:
            bad.append(name)
        if name not in MUTATION_BUDGET:
            continue
        ms = list(braid_mutations(Z))
        k = MUTATION_BUDGET[name]
        if k is not None and len(ms) > k:
            ms = random.Random(0).sample(ms, k)
        for i, kind, key, value in ms:
            muts += 1
            missed += check_centre_correspondence(m, mutate_centre(Z, i, kind, key, value)).ok
    return not bad and missed == 0, (f"{len(monoids)} Gray-monoids, correspondence failures {bad} "
                                     "(graded_braided_z3 sampled, 8 objects); "
                                     f"{muts} braid mutations on {sorted(MUTATION_BUDGET)} "
                                     f"(all on braided_z2, sampled otherwise), {missed} undetected")


# -- 10. determinism and round trips ------------------------------------------------------------

def _cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(argv)
    return code, buf.getvalue()


def criterion_10():
    bad = []
    for name in FIXTURES:
        g = fixture(name)
        text = print_category(g)
        h = parse_category(text)
        if not same_tables(h, g) or print_category(h) != text:
            bad.append(name)
        if g.n0 == 1:
            mt = print_monoid(unsuspend(g))
            if print_monoid(parse_monoid(mt)) != mt:
                bad.append(name + ".monoid")
    A, B = fixture("walking_arrow"), fixture("braided_z2")
    F = enumerate_functors(A, B)[0]
    p = enumerate_trinats(F, F)[3]
    s = enumerate_trimods(p, p)[1]
    for x in (F, p, s, enumerate_perturbations(s, s)[0]):
        t = print_transfor(x)
        if parse_transfor(t, {A.name: A, B.name: B}) != x:
            bad.append(type(x).__name__)
    runs = [["validate", "braided_z3"], ["hom", "terminal", "shifted_z2", "--caps", "4,16,64,128"],
            ["closed-check", "terminal", "bz2", "strict_leftzero", "walking_z2_3cell", "--caps", "2,4,6,8"],
            ["centre", "braided_z2"]]
    nondet = [r[0] for r in runs if _cli(r) != _cli(r)]
    return not bad and not nondet, (f"{len(FIXTURES)} fixtures and 4 transfor kinds round-trip "
                                    f"(failures {bad}); {len(runs)} CLI commands rerun, "
                                    f"non-deterministic {nondet}")


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_acceptance(n, capsys):
    ok, line = _run(n, CRITERIA[n])
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    only = [int(a) for a in sys.argv[1:]] or sorted(CRITERIA)
    results = [_run(n, CRITERIA[n])[0] for n in only]
    sys.exit(0 if all(results) else 1)
