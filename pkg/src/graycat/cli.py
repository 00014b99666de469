"""Batch command line.

Categories are given as file paths or as fixture names.  Every command
prints a report (and writes it to ``--report`` if given).  Exit status: 0 when
the report is empty, 1 when it is not, 2 on usage errors, 3 when a size cap
is exceeded, 4 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .calculus import compose_trinat, interchanger_trinat, vcompose_trimod
from .centre import DEFAULT_CENTRE_CAPS, centre, check_centre_correspondence, suspend
from .closed import DEFAULT_CAPS, HomBuildConfig, build_hom, check_closed_axioms, \
    check_normal_closed_inclusion
from .core import ONE, CellLookupError, validate_gray_category
from .fileformat import ParseError, parse_category, parse_monoid, parse_transfor, \
    print_category, print_transfor
from .fixtures import FIXTURES, fixture
from .report import ValidationReport
from .search import SizeError
from .transfors import GrayFunctor, Perturbation, Trimod, Trinat, check_gray_functor, \
    check_perturbation, check_trimodification, check_trinatural

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_CAP, EXIT_IO = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def load_any(spec: str):
    """A GrayCategory or GrayMonoid from a path or fixture name."""
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        if text.lstrip().startswith("graymonoid"):
            return parse_monoid(text)
        return parse_category(text)
    if spec == "terminal":
        return ONE
    if spec in FIXTURES:
        return fixture(spec)
    raise InputError(f"no such file or fixture: {spec}")


def load_category(spec: str):
    x = load_any(spec)
    return x if hasattr(x, "n0") else suspend(x)


def load_monoid(spec: str):
    from .centre import GrayMonoid, unsuspend
    x = load_any(spec)
    return x if isinstance(x, GrayMonoid) else unsuspend(x)


def _caps(text: str, n: int) -> tuple:
    try:
        caps = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad caps {text!r}") from None
    if len(caps) != n:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated caps")
    return caps


def _cats(args) -> dict:
    out = {}
    for spec in args.cat or []:
        g = load_category(spec)
        out[g.name] = g
    return out


def _transfor(path: str, cats: dict):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    needed = {line.split()[1] for line in text.splitlines()
              if line.strip().startswith(("dom ", "cod "))}
    for name in needed - set(cats):
        cats[name] = load_category(name)
    return parse_transfor(text, cats)


def check_any(x) -> ValidationReport:
    if isinstance(x, GrayFunctor):
        return check_gray_functor(x.dom, x.cod, x)
    if isinstance(x, Trinat):
        return check_trinatural(x.src, x.tgt, x)
    if isinstance(x, Trimod):
        return check_trimodification(x.src, x.tgt, x)
    if isinstance(x, Perturbation):
        return check_perturbation(x.src, x.tgt, x)
    raise TypeError(type(x))


# ---------------------------------------------------------------------------
# commands: each returns (report, extra output lines)


def cmd_validate(args):
    g = load_category(args.category)
    return validate_gray_category(g, cap=args.max_violations), [f"category {g.name} {g.counts()}"]


def cmd_check_transfor(args):
    x = _transfor(args.transfor, _cats(args))
    return check_any(x), [f"{type(x).__name__.lower()}"]


def cmd_compose(args):
    cats = _cats(args)
    second, first = _transfor(args.second, cats), _transfor(args.first, cats)
    if isinstance(first, Trinat):
        out = compose_trinat(second, first)
    elif isinstance(first, Trimod):
        out = vcompose_trimod(second, first)
    else:
        raise InputError("compose takes two trinats or two trimods")
    r = check_any(out)
    if args.out:
        _write(args.out, print_transfor(out))
    return r, [f"composite {type(out).__name__.lower()}"]


def cmd_interchange(args):
    cats = _cats(args)
    p, j = _transfor(args.p, cats), _transfor(args.j, cats)
    if not (isinstance(p, Trinat) and isinstance(j, Trinat)):
        raise InputError("interchange takes two trinats")
    adj = interchanger_trinat(p, j)
    r = ValidationReport(cap=args.max_violations)
    r.merge(check_any(adj.left), "left.")
    r.merge(check_any(adj.right), "right.")
    r.merge(check_any(adj.unit), "unit.")
    r.merge(check_any(adj.counit), "counit.")
    if args.out:
        _write(args.out, print_transfor(adj.left))
    return r, ["interchanger trimodification"]


def _config(args) -> HomBuildConfig:
    return HomBuildConfig(args.mode, args.caps or DEFAULT_CAPS, seed=args.seed,
                          normalized_adjoints=args.normalized_adjoints)


def cmd_hom(args):
    A, B = load_category(args.A), load_category(args.B)
    h = build_hom(A, B, _config(args))
    r = validate_gray_category(h.gray, cap=args.max_violations)
    if args.out:
        _write(args.out, print_category(h.gray))
    return r, [f"hom {h.gray.name} {h.counts()}"]


def cmd_closed_check(args):
    cats = [load_category(c) for c in args.categories]
    if len(cats) == 3:
        cats = [ONE] + cats
    if len(cats) != 4:
        raise InputError("closed-check takes three or four categories")
    s = check_closed_axioms(*cats, _config(args), max_triples=args.max_triples, cap=args.max_violations)
    extra = [f"hom {k} {v}" for k, v in s.counts.items()]
    extra += [f"checked {k} {v}" for k, v in s.checked.items()]
    return s.report, extra


def cmd_sharp_compare(args):
    A, B, C = (load_category(c) for c in args.categories)
    r = check_normal_closed_inclusion(A, B, C, args.caps or DEFAULT_CAPS, cap=args.max_violations,
                                      normalized_adjoints=args.normalized_adjoints)
    return r, []


def cmd_centre(args):
    m = load_monoid(args.monoid)
    caps = args.centre_caps or DEFAULT_CENTRE_CAPS
    Z = centre(m, caps, ssg_only=args.ssg_only, sample=args.sample, seed=args.seed)
    r = check_centre_correspondence(m, Z, cap=args.max_violations)
    extra = [f"centre {m.name} objects {len(Z.objects)} morphisms {len(Z.morphisms)} cells {len(Z.cells)}"]
    if args.sample:
        extra.append(f"sampled {len(Z.chosen)} seed {args.seed}")
    return r, extra


COMMANDS = {
    "validate": cmd_validate, "check-transfor": cmd_check_transfor, "compose": cmd_compose,
    "interchange": cmd_interchange, "hom": cmd_hom, "closed-check": cmd_closed_check,
    "sharp-compare": cmd_sharp_compare, "centre": cmd_centre,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--caps", type=lambda s: _caps(s, 4), default=None,
                        help="d0,d1,d2,d3 cell caps for hom construction")
    common.add_argument("--mode", default="ssg", choices=["full", "sharp", "ssg"])
    common.add_argument("--report", metavar="PATH", help="also write the report here")
    common.add_argument("--jobs", type=int, default=1,
                        help="accepted for interface compatibility; work runs in one process")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-violations", type=int, default=100)
    common.add_argument("--normalized-adjoints", action="store_true",
                        help="keep only trinats with identity adjoint data at identity 1-cells")
    common.add_argument("--cat", action="append", metavar="CATEGORY",
                        help="category file or fixture referenced by transfor files")

    ap = argparse.ArgumentParser(prog="graycat", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("validate", parents=[common])
    p.add_argument("category")
    p = sub.add_parser("check-transfor", parents=[common])
    p.add_argument("transfor")
    p = sub.add_parser("compose", parents=[common], help="second after first")
    p.add_argument("second")
    p.add_argument("first")
    p.add_argument("--out")
    p = sub.add_parser("interchange", parents=[common], help="p_j for trinats p and j")
    p.add_argument("p")
    p.add_argument("j")
    p.add_argument("--out")
    p = sub.add_parser("hom", parents=[common])
    p.add_argument("A")
    p.add_argument("B")
    p.add_argument("--out")
    p = sub.add_parser("closed-check", parents=[common], help="[terminal] A B C")
    p.add_argument("categories", nargs="+")
    p.add_argument("--max-triples", type=int, default=None)
    p = sub.add_parser("sharp-compare", parents=[common])
    p.add_argument("categories", nargs=3)
    p = sub.add_parser("centre", parents=[common])
    p.add_argument("monoid")
    p.add_argument("--centre-caps", type=lambda s: _caps(s, 3), default=None)
    p.add_argument("--ssg-only", action="store_true")
    p.add_argument("--sample", type=int, default=None)
    return ap


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report, extra = COMMANDS[args.command](args)
    except SizeError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (CellLookupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = f"command {args.command}\n" + "".join(l + "\n" for l in extra) + report.render()
    sys.stdout.write(text)
    if args.report:
        try:
            _write(args.report, text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


if __name__ == "__main__":
    sys.exit(main())
