"""Pasting expressions: trees of Gray-category operations.

A node's children that are not themselves nodes are taken as cells of the
dimension the slot expects, so ``VComp3(B, A)`` with plain cells is fine.
Every node checks its boundaries before evaluating; a mismatch raises
:class:`PastingError` carrying the path of the offending node.
"""

from __future__ import annotations

from dataclasses import dataclass


class PastingError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class Node:
    __slots__ = ()
    kind = "node"
    slots: tuple = ()
    dim = 0

    def children(self):
        return [getattr(self, s) for s in self.__slots__]


def _node(kind, names, dims, out):
    cls = type(kind, (Node,), {
        "__slots__": names,
        "kind": kind,
        "slots": dims,
        "dim": out,
    })

    def __init__(self, *args):
        if len(args) != len(names):
            raise TypeError(f"{kind} takes {len(names)} arguments")
        for n, a in zip(names, args):
            setattr(self, n, a)

    def __repr__(self):
        return f"{kind}(" + ", ".join(repr(getattr(self, n)) for n in names) + ")"

    cls.__init__ = __init__
    cls.__repr__ = __repr__
    return cls


@dataclass(frozen=True)
class Cell:
    """A named leaf, useful when the label should appear in error paths."""

    dim: int
    value: object
    label: str = ""


Id1 = _node("id1", ("x",), (0,), 1)
Comp1 = _node("comp1", ("g", "f"), (1, 1), 1)
Id2 = _node("id2", ("f",), (1,), 2)
Whisk2L = _node("whisk2L", ("h", "a"), (1, 2), 2)
Whisk2R = _node("whisk2R", ("a", "h"), (2, 1), 2)
VComp2 = _node("vcomp2", ("b", "a"), (2, 2), 2)
Id3 = _node("id3", ("a",), (2,), 3)
Whisk3L = _node("whisk3L", ("h", "A"), (1, 3), 3)
Whisk3R = _node("whisk3R", ("A", "h"), (3, 1), 3)
VComp3 = _node("vcomp3", ("B", "A"), (3, 3), 3)
HComp3 = _node("hcomp3", ("B", "A"), (3, 3), 3)
Interchanger = _node("interchanger", ("a", "b"), (2, 2), 3)
Inverse3 = _node("inverse3", ("A",), (3,), 3)
MateUnit = _node("mateUnit", ("adj",), (-1,), 3)
MateCounit = _node("mateCounit", ("adj",), (-1,), 3)

NODE_KINDS = (
    Id1, Comp1, Id2, Whisk2L, Whisk2R, VComp2, Id3, Whisk3L, Whisk3R, VComp3,
    HComp3, Interchanger, Inverse3, MateUnit, MateCounit,
)


def obj_src(ops, d, c):
    while d > 1:
        c = ops.src(d, c)
        d -= 1
    return ops.src(1, c)


def obj_tgt(ops, d, c):
    while d > 1:
        c = ops.src(d, c)
        d -= 1
    return ops.tgt(1, c)


def _leaf(x):
    return x.value if isinstance(x, Cell) else x


def evaluate_pasting(ops, e, path: str = "root"):
    """Fold ``e`` through the operations of ``ops`` and return the cell."""
    if isinstance(e, Cell):
        return e.value
    if not isinstance(e, Node):
        return e
    vals = []
    for name, child in zip(e.__slots__, e.children()):
        vals.append(evaluate_pasting(ops, child, f"{path}.{name}"))
    try:
        return _apply(ops, e.kind, vals, path)
    except PastingError:
        raise
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise PastingError(path, f"{e.kind} undefined ({exc!r})") from None


def _need(cond, path, msg):
    if not cond:
        raise PastingError(path, msg)


def _apply(ops, kind, v, path):
    if kind == "id1":
        return ops.i1(v[0])
    if kind == "comp1":
        g, f = v
        _need(ops.tgt(1, f) == ops.src(1, g), path, "comp1 of non-composable 1-cells")
        return ops.c1(g, f)
    if kind == "id2":
        return ops.i2(v[0])
    if kind == "whisk2L":
        h, a = v
        _need(ops.src(1, h) == obj_tgt(ops, 2, a), path, "whisk2L boundary mismatch")
        return ops.wl2(h, a)
    if kind == "whisk2R":
        a, h = v
        _need(ops.tgt(1, h) == obj_src(ops, 2, a), path, "whisk2R boundary mismatch")
        return ops.wr2(a, h)
    if kind == "vcomp2":
        b, a = v
        _need(ops.tgt(2, a) == ops.src(2, b), path, "vcomp2 of non-composable 2-cells")
        return ops.v2(b, a)
    if kind == "id3":
        return ops.i3(v[0])
    if kind == "whisk3L":
        h, A = v
        _need(ops.src(1, h) == obj_tgt(ops, 3, A), path, "whisk3L boundary mismatch")
        return ops.wl3(h, A)
    if kind == "whisk3R":
        A, h = v
        _need(ops.tgt(1, h) == obj_src(ops, 3, A), path, "whisk3R boundary mismatch")
        return ops.wr3(A, h)
    if kind == "vcomp3":
        B, A = v
        _need(ops.tgt(3, A) == ops.src(3, B), path, "vcomp3 of non-composable 3-cells")
        return ops.v3(B, A)
    if kind == "hcomp3":
        B, A = v
        _need(ops.tgt(2, ops.src(3, A)) == ops.src(2, ops.src(3, B)), path,
              "hcomp3 of non-composable 3-cells")
        return ops.h3(B, A)
    if kind == "interchanger":
        a, b = v
        _need(obj_tgt(ops, 2, a) == obj_src(ops, 2, b), path, "interchanger boundary mismatch")
        return ops.ich(a, b)
    if kind == "inverse3":
        return ops.inv3(v[0])
    if kind == "mateUnit":
        return v[0].unit
    if kind == "mateCounit":
        return v[0].counit
    raise PastingError(path, f"unknown node kind {kind}")


def static_boundary(ops, e, path: str = "root"):
    """Source and target of a 3-cell expression, computed from its 2-cell parts."""
    if not isinstance(e, Node) or e.dim != 3:
        x = evaluate_pasting(ops, e, path)
        return ops.src(3, x), ops.tgt(3, x)
    k = e.kind
    if k == "id3":
        a = evaluate_pasting(ops, e.a, path + ".a")
        return a, a
    if k == "vcomp3":
        return static_boundary(ops, e.A, path + ".A")[0], static_boundary(ops, e.B, path + ".B")[1]
    if k == "hcomp3":
        sa, ta = static_boundary(ops, e.A, path + ".A")
        sb, tb = static_boundary(ops, e.B, path + ".B")
        return ops.v2(sb, sa), ops.v2(tb, ta)
    if k == "whisk3L":
        h = evaluate_pasting(ops, e.h, path + ".h")
        s, t = static_boundary(ops, e.A, path + ".A")
        return ops.wl2(h, s), ops.wl2(h, t)
    if k == "whisk3R":
        h = evaluate_pasting(ops, e.h, path + ".h")
        s, t = static_boundary(ops, e.A, path + ".A")
        return ops.wr2(s, h), ops.wr2(t, h)
    if k == "inverse3":
        s, t = static_boundary(ops, e.A, path + ".A")
        return t, s
    if k == "interchanger":
        a = evaluate_pasting(ops, e.a, path + ".a")
        b = evaluate_pasting(ops, e.b, path + ".b")
        f, f2 = ops.src(2, a), ops.tgt(2, a)
        g, g2 = ops.src(2, b), ops.tgt(2, b)
        return (ops.v2(ops.wr2(b, f2), ops.wl2(g, a)),
                ops.v2(ops.wl2(g2, a), ops.wr2(b, f)))
    if k == "mateUnit":
        adj = _leaf(e.adj)
        return ops.i2(ops.src(2, adj.left)), ops.v2(adj.right, adj.left)
    if k == "mateCounit":
        adj = _leaf(e.adj)
        return ops.v2(adj.left, adj.right), ops.i2(ops.tgt(2, adj.left))
    raise PastingError(path, f"unknown node kind {k}")


# -- small builders used throughout the calculus -----------------------------


def vchain(*cells):
    """Vertical composite of 3-cells listed in the order they are applied."""
    e = cells[0]
    for c in cells[1:]:
        e = VComp3(c, e)
    return e


def hchain(*cells):
    """Horizontal composite of 3-cells listed from the last-applied 2-cell to the first."""
    e = cells[-1]
    for c in reversed(cells[:-1]):
        e = HComp3(c, e)
    return e


def vchain2(*cells):
    """Vertical composite of 2-cells listed from last-applied to first."""
    e = cells[-1]
    for c in reversed(cells[:-1]):
        e = VComp2(c, e)
    return e
