"""Validation reports shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field

STRUCTURAL = "structural"
AXIOM = "axiom"


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(_fmt(y) for y in x) + ")"
    return str(x)


@dataclass(frozen=True)
class Violation:
    kind: str
    law: str
    cells: tuple
    detail: str = ""

    def render(self) -> str:
        s = f"{self.kind} {self.law} {_fmt(self.cells)}"
        return s + (f" : {self.detail}" if self.detail else "")


@dataclass
class ValidationReport:
    """Collects every violation found, keeping at most ``cap`` of them."""

    cap: int = 100
    violations: list = field(default_factory=list)
    total: int = 0

    def add(self, kind: str, law: str, cells=(), detail: str = "") -> None:
        self.total += 1
        if len(self.violations) < self.cap:
            self.violations.append(Violation(kind, law, tuple(cells), detail))

    def structural(self, law: str, cells=(), detail: str = "") -> None:
        self.add(STRUCTURAL, law, cells, detail)

    def axiom(self, law: str, cells=(), detail: str = "") -> None:
        self.add(AXIOM, law, cells, detail)

    def merge(self, other: "ValidationReport", prefix: str = "") -> None:
        for v in other.violations:
            self.add(v.kind, prefix + v.law, v.cells, v.detail)
        self.total += other.total - len(other.violations)

    @property
    def ok(self) -> bool:
        return self.total == 0

    @property
    def has_structural(self) -> bool:
        return any(v.kind == STRUCTURAL for v in self.violations)

    def laws(self) -> set:
        return {v.law for v in self.violations}

    def __len__(self) -> int:
        return self.total

    def render(self) -> str:
        lines = [f"violations {self.total}"]
        lines += [v.render() for v in self.violations]
        if self.total > len(self.violations):
            lines.append(f"truncated {self.total - len(self.violations)}")
        return "\n".join(lines) + "\n"
