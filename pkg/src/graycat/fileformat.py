"""Plain-text format for Gray-categories, Gray-monoids and transfors.

A Gray-category file looks like::

    graycat walking_arrow
    objects 2
    id1(0) = 0
    id1(1) = 1

    hom 0 1 {
      arrow 2
      twocell 2 : 2 => 2
      threecell 2 : 2 => 2
      id2(2) = 2
      vcomp2(2,2) = 2
      ...
    }

    comp1 {
      comp1(0,0) = 0
      ...
    }

followed by ``whisk2L``, ``whisk2R``, ``whisk3L``, ``whisk3R`` and
``interchanger`` sections.  Cell ids are global integers per dimension.
Blank lines and ``#`` comments are ignored.  ``print_category`` writes the
canonical form: homs in order, declarations and entries sorted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import GrayCategory
from .transfors import AdjointEquivalence, GrayFunctor, Perturbation, Trimod, Trinat


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg, self.line, self.col = msg, line, col


# op -> (argument dimensions, result dimension, GrayCategory field)
OPS = {
    "id1": ((0,), 1, "id1"),
    "comp1": ((1, 1), 1, "comp1"),
    "id2": ((1,), 2, "id2"),
    "vcomp2": ((2, 2), 2, "vcomp2"),
    "whisk2L": ((1, 2), 2, "whisk2L"),
    "whisk2R": ((2, 1), 2, "whisk2R"),
    "id3": ((2,), 3, "id3"),
    "vcomp3": ((3, 3), 3, "vcomp3"),
    "hcomp3": ((3, 3), 3, "hcomp3"),
    "whisk3L": ((1, 3), 3, "whisk3L"),
    "whisk3R": ((3, 1), 3, "whisk3R"),
    "interchanger": ((2, 2), 3, "interchanger"),
    "inverse3": ((3,), 3, "inverses3"),
}
HOM_OPS = ("id2", "vcomp2", "id3", "vcomp3", "hcomp3", "inverse3")
SECTIONS = ("comp1", "whisk2L", "whisk2R", "whisk3L", "whisk3R", "interchanger")
DECL = {"arrow": 1, "twocell": 2, "threecell": 3}

_ENTRY = re.compile(r"^(\w+)\(\s*([^)]*)\)\s*=\s*(.+)$")


@dataclass
class _Line:
    no: int
    text: str
    indent: int


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield _Line(no, body.strip(), len(body) - len(body.lstrip()) + 1)


def _int(tok: str, ln: _Line) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", ln.no, ln.indent + ln.text.find(tok)) from None


def _entry(ln: _Line):
    m = _ENTRY.match(ln.text)
    if not m:
        raise ParseError(f"expected 'op(args) = value', got {ln.text!r}", ln.no, ln.indent)
    args = [a.strip() for a in m.group(2).split(",")] if m.group(2).strip() else []
    return m.group(1), args, m.group(3).strip()


# ---------------------------------------------------------------------------
# Gray-categories


def parse_category(text: str, name_key: str = "graycat") -> GrayCategory:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    it = iter(lines)
    head = next(it)
    parts = head.text.split()
    if len(parts) != 2 or parts[0] != name_key:
        raise ParseError(f"expected '{name_key} NAME'", head.no, head.indent)
    name = parts[1]
    ln = next(it, None)
    if ln is None or not ln.text.startswith("objects "):
        raise ParseError("expected 'objects N'", ln.no if ln else head.no + 1)
    n0 = _int(ln.text.split()[1], ln)
    decls = {1: {}, 2: {}, 3: {}}       # id -> ((src, tgt), hom, line)
    entries = []                        # (op, args, value, hom or None, line)
    hom = None
    section = None
    for ln in it:
        t = ln.text
        if t == "}":
            if hom is None and section is None:
                raise ParseError("unmatched '}'", ln.no, ln.indent)
            hom = section = None
            continue
        if hom is None and section is None:
            if t.startswith("hom ") and t.endswith("{"):
                toks = t[:-1].split()
                if len(toks) != 3:
                    raise ParseError("expected 'hom X Y {'", ln.no, ln.indent)
                hom = (_int(toks[1], ln), _int(toks[2], ln))
                for x in hom:
                    if not 0 <= x < n0:
                        raise ParseError(f"no object {x}", ln.no, ln.indent)
                continue
            if t.endswith("{") and t[:-1].strip() in SECTIONS:
                section = t[:-1].strip()
                continue
            op, args, val = _entry(ln)
            if op != "id1":
                raise ParseError(f"{op} entries belong in a section", ln.no, ln.indent)
            entries.append((op, args, val, None, ln))
            continue
        if hom is not None:
            word = t.split()[0]
            if word in DECL:
                m = re.match(r"^\w+\s+(-?\d+)(?:\s*:\s*(-?\d+)\s*=>\s*(-?\d+))?$", t)
                if not m or (word == "arrow") != (m.group(2) is None):
                    form = "arrow N" if word == "arrow" else f"{word} N : S => T"
                    raise ParseError(f"expected '{form}'", ln.no, ln.indent)
                d = DECL[word]
                c = int(m.group(1))
                if c in decls[d]:
                    raise ParseError(f"{word} {c} declared twice", ln.no, ln.indent)
                st = hom if d == 1 else (int(m.group(2)), int(m.group(3)))
                decls[d][c] = (st, hom, ln)
                continue
            op, args, val = _entry(ln)
            if op not in HOM_OPS:
                raise ParseError(f"{op} is not a hom table", ln.no, ln.indent)
            entries.append((op, args, val, hom, ln))
            continue
        op, args, val = _entry(ln)
        if op != section:
            raise ParseError(f"{op} entry inside section {section}", ln.no, ln.indent)
        entries.append((op, args, val, None, ln))
    if hom is not None or section is not None:
        raise ParseError("unterminated block", lines[-1].no + 1)

    counts = [n0] + [len(decls[d]) for d in (1, 2, 3)]
    for d in (1, 2, 3):
        for c, (_, _, ln) in decls[d].items():
            if not 0 <= c < counts[d]:
                raise ParseError(f"cell ids of dimension {d} must be 0..{counts[d] - 1}", ln.no, ln.indent)
    cells = {0: None, 1: {}, 2: {}, 3: {}}
    cells[1] = {c: st for c, (st, _, _) in decls[1].items()}

    def hom_of(d, c):
        return decls[d][c][1]

    # boundaries of 2- and 3-cells must be cells one dimension down, in the same hom
    for d in (2, 3):
        for c, ((s, t), h, ln) in decls[d].items():
            for b in (s, t):
                if b not in decls[d - 1]:
                    raise ParseError(f"dangling reference: no {d - 1}-cell {b}", ln.no, ln.indent)
                if hom_of(d - 1, b) != h:
                    raise ParseError(f"dimension mismatch: {d - 1}-cell {b} is not in hom {h[0]} {h[1]}",
                                     ln.no, ln.indent)
            cells[d][c] = (s, t)

    tables = {f: {} for _, _, f in OPS.values()}
    id_tables = {"id1": [None] * n0, "id2": [None] * counts[1], "id3": [None] * counts[2]}
    for op, args, val, h, ln in entries:
        dims, rd, fld = OPS[op]
        if len(args) != len(dims):
            raise ParseError(f"{op} takes {len(dims)} argument(s)", ln.no, ln.indent)
        key = []
        for a, d in zip(args, dims):
            c = _int(a, ln)
            if d == 0:
                if not 0 <= c < n0:
                    raise ParseError(f"dangling reference: no object {c}", ln.no, ln.indent)
            elif c not in decls[d]:
                raise ParseError(f"dangling reference: no {d}-cell {c}", ln.no, ln.indent)
            key.append(c)
        v = _int(val, ln)
        if v not in decls[rd]:
            raise ParseError(f"dangling reference: no {rd}-cell {v}", ln.no, ln.indent)
        if h is not None and hom_of(dims[-1], key[-1]) != h:
            raise ParseError(f"dimension mismatch: {op} entry does not belong to hom {h[0]} {h[1]}",
                             ln.no, ln.indent)
        k = key[0] if len(key) == 1 else tuple(key)
        if op in id_tables:
            if id_tables[op][k] is not None:
                raise ParseError(f"duplicate entry {op}({k})", ln.no, ln.indent)
            id_tables[op][k] = v
        else:
            if k in tables[fld]:
                raise ParseError(f"duplicate entry {op}{k}", ln.no, ln.indent)
            tables[fld][k] = v
    for op, tab in id_tables.items():
        if None in tab:
            raise ParseError(f"{op} is missing entry {tab.index(None)}", lines[-1].no)
    return GrayCategory(
        name=name, n0=n0,
        one=[cells[1][c] for c in range(counts[1])],
        two=[cells[2][c] for c in range(counts[2])],
        three=[cells[3][c] for c in range(counts[3])],
        id1=id_tables["id1"], comp1=tables["comp1"], id2=id_tables["id2"],
        vcomp2=tables["vcomp2"], whisk2L=tables["whisk2L"], whisk2R=tables["whisk2R"],
        id3=id_tables["id3"], vcomp3=tables["vcomp3"], hcomp3=tables["hcomp3"],
        whisk3L=tables["whisk3L"], whisk3R=tables["whisk3R"],
        interchanger=tables["interchanger"], inverses3=tables["inverses3"],
    )


def _fmt_entry(op, k, v) -> str:
    args = ",".join(map(str, k)) if isinstance(k, tuple) else str(k)
    return f"{op}({args}) = {v}"


def print_category(g: GrayCategory, name_key: str = "graycat", rename: dict | None = None) -> str:
    rename = rename or {}
    out = [f"{name_key} {g.name}", f"objects {g.n0}"]
    out += [_fmt_entry("id1", x, g.id1[x]) for x in range(g.n0)]
    hom1 = {c: st for c, st in enumerate(g.one)}
    hom2 = {c: hom1[s] for c, (s, _) in enumerate(g.two)}
    hom3 = {c: hom2[s] for c, (s, _) in enumerate(g.three)}
    homs = sorted(set(hom1.values()))
    tabs = {"id2": (dict(enumerate(g.id2)), hom1), "vcomp2": (g.vcomp2, hom2),
            "id3": (dict(enumerate(g.id3)), hom2), "vcomp3": (g.vcomp3, hom3),
            "hcomp3": (g.hcomp3, hom3), "inverse3": (g.inverses3, hom3)}
    for h in homs:
        out += ["", f"hom {h[0]} {h[1]} {{"]
        out += [f"  arrow {c}" for c in sorted(hom1) if hom1[c] == h]
        out += [f"  twocell {c} : {s} => {t}" for c, (s, t) in enumerate(g.two) if hom2[c] == h]
        out += [f"  threecell {c} : {s} => {t}" for c, (s, t) in enumerate(g.three) if hom3[c] == h]
        for op in HOM_OPS:
            table, where = tabs[op]
            for k in sorted(table):
                last = k[-1] if isinstance(k, tuple) else k
                if where.get(last) == h:
                    out.append("  " + _fmt_entry(op, k, table[k]))
        out.append("}")
    for sec in SECTIONS:
        label = rename.get(sec, sec)
        table = getattr(g, OPS[sec][2])
        out += ["", f"{label} {{"]
        out += ["  " + _fmt_entry(label, k, table[k]) for k in sorted(table)]
        out.append("}")
    return "\n".join(out) + "\n"


def canonicalize(text: str) -> str:
    return print_category(parse_category(text))


def same_tables(a: GrayCategory, b: GrayCategory) -> bool:
    fields = ("name", "n0", "one", "two", "three", "id1", "comp1", "id2", "vcomp2", "whisk2L",
              "whisk2R", "id3", "vcomp3", "hcomp3", "whisk3L", "whisk3R", "interchanger", "inverses3")
    return all(getattr(a, f) == getattr(b, f) for f in fields)


def load_category(path) -> GrayCategory:
    with open(path) as fh:
        return parse_category(fh.read())


# ---------------------------------------------------------------------------
# Gray-monoids: a one-object category file whose comp1 section is 'tensor'


def print_monoid(m) -> str:
    from .centre import suspend
    return print_category(suspend(m), "graymonoid", {"comp1": "tensor"})


def parse_monoid(text: str):
    from .centre import unsuspend
    text = "\n".join(_rename_tensor(line) for line in text.splitlines())
    return unsuspend(parse_category(text, "graymonoid"))


def _rename_tensor(line: str) -> str:
    s = line.strip()
    if s == "tensor {" or s.startswith("tensor("):
        return line.replace("tensor", "comp1", 1)
    return line


# ---------------------------------------------------------------------------
# transfors: component tables referencing categories by name


def _functor_lines(F: GrayFunctor) -> list:
    out = [f"dom {F.dom.name}", f"cod {F.cod.name}"]
    for d, tab in enumerate((F.f0, F.f1, F.f2, F.f3)):
        out += [f"f{d}({i}) = {v}" for i, v in enumerate(tab)]
    return out


def _block(kind: str, body: list, label: str = "") -> list:
    head = f"{label} {kind} {{" if label else f"{kind} {{"
    return [head] + ["  " + l for l in body] + ["}"]


def _transfor_lines(x) -> list:
    if isinstance(x, GrayFunctor):
        return _block("functor", _functor_lines(x))
    if isinstance(x, Trinat):
        A = x.dom
        body = _sub("source", x.src) + _sub("target", x.tgt)
        body += [f"comp({i}) = {c}" for i, c in enumerate(x.comp)]
        body += [f"adj({i}) = {a.left} {a.right} {a.unit} {a.counit}" for i, a in enumerate(x.adj)]
        body += [f"local({i}) = {c}" for i, c in enumerate(x.local)]
        body += [f"unitor({i}) = {c}" for i, c in enumerate(x.unitor)]
        body += [f"compositor({g},{f}) = {c}" for (g, f), c in zip(A.composable_pairs, x.compositor)]
        return _block("trinat", body)
    if isinstance(x, Trimod):
        body = _sub("source", x.src) + _sub("target", x.tgt)
        body += [f"c2({i}) = {c}" for i, c in enumerate(x.c2)]
        body += [f"c3({i}) = {c}" for i, c in enumerate(x.c3)]
        return _block("trimod", body)
    if isinstance(x, Perturbation):
        body = _sub("source", x.src) + _sub("target", x.tgt)
        body += [f"c3({i}) = {c}" for i, c in enumerate(x.c3)]
        return _block("perturbation", body)
    raise TypeError(type(x))


def _sub(label, x) -> list:
    lines = _transfor_lines(x)
    lines[0] = f"{label} {lines[0]}"
    return lines


def print_transfor(x) -> str:
    return "\n".join(_transfor_lines(x)) + "\n"


def parse_transfor(text: str, categories: dict):
    """Parse a transfor; ``categories`` maps names to GrayCategory objects."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    x, pos = _parse_block(lines, 0, categories, None)
    if pos != len(lines):
        ln = lines[pos]
        raise ParseError("trailing input", ln.no, ln.indent)
    return x


def _parse_block(lines, pos, cats, label):
    ln = lines[pos]
    toks = ln.text.split()
    if label is not None:
        if not toks or toks[0] != label:
            raise ParseError(f"expected '{label} ...'", ln.no, ln.indent)
        toks = toks[1:]
    if len(toks) != 2 or toks[1] != "{" or toks[0] not in ("functor", "trinat", "trimod", "perturbation"):
        raise ParseError("expected 'functor|trinat|trimod|perturbation {'", ln.no, ln.indent)
    kind = toks[0]
    pos += 1
    subs = {}
    if kind != "functor":
        for lab in ("source", "target"):
            if pos >= len(lines):
                raise ParseError("unterminated block", ln.no, ln.indent)
            subs[lab], pos = _parse_block(lines, pos, cats, lab)
    rows = {}
    while True:
        if pos >= len(lines):
            raise ParseError("unterminated block", ln.no, ln.indent)
        cur = lines[pos]
        pos += 1
        if cur.text == "}":
            break
        if kind == "functor" and cur.text.split()[0] in ("dom", "cod"):
            w = cur.text.split()
            if len(w) != 2 or w[1] not in cats:
                raise ParseError(f"unknown category {w[-1]!r}", cur.no, cur.indent)
            rows[w[0]] = cats[w[1]]
            continue
        op, args, val = _entry(cur)
        key = tuple(_int(a, cur) for a in args)
        vals = tuple(_int(v, cur) for v in val.split())
        if (op, key) in rows:
            raise ParseError(f"duplicate entry {op}{key}", cur.no, cur.indent)
        rows[(op, key)] = (vals, cur)
    try:
        return _build(kind, subs, rows, ln), pos
    except (KeyError, IndexError) as exc:
        raise ParseError(f"incomplete {kind}: missing {exc}", ln.no, ln.indent) from None


def _column(rows, op, n, ln, width=1):
    out = []
    for i in range(n):
        if (op, (i,)) not in rows:
            raise ParseError(f"missing {op}({i})", ln.no, ln.indent)
        vals, cur = rows[(op, (i,))]
        if len(vals) != width:
            raise ParseError(f"{op} expects {width} value(s)", cur.no, cur.indent)
        out.append(vals[0] if width == 1 else vals)
    return tuple(out)


def _build(kind, subs, rows, ln):
    if kind == "functor":
        A, B = rows["dom"], rows["cod"]
        maps = [_column(rows, f"f{d}", n, ln) for d, n in enumerate(A.counts())]
        return GrayFunctor(A, B, *maps)
    src, tgt = subs["source"], subs["target"]
    A = src.dom
    if kind == "trinat":
        comp = _column(rows, "comp", A.n0, ln)
        adj = tuple(AdjointEquivalence(*v) for v in _column(rows, "adj", len(A.one), ln, 4))
        local = _column(rows, "local", len(A.two), ln)
        unitor = _column(rows, "unitor", A.n0, ln)
        compositor = []
        for pair in A.composable_pairs:
            if ("compositor", pair) not in rows:
                raise ParseError(f"missing compositor{pair}", ln.no, ln.indent)
            compositor.append(rows[("compositor", pair)][0][0])
        return Trinat(src, tgt, comp, adj, local, unitor, tuple(compositor))
    if kind == "trimod":
        return Trimod(src, tgt, _column(rows, "c2", A.n0, ln), _column(rows, "c3", len(A.one), ln))
    return Perturbation(src, tgt, _column(rows, "c3", A.n0, ln))
