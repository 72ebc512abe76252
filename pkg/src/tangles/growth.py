"""Concatenations, superadditivity and sandwich checks, and finite growth-rate prefixes."""
from __future__ import annotations

from dataclasses import dataclass, field

from .dualgraph import DualGraph
from .enumerator import KINDS, ClassCount, CountTable
from .grid import NORTH, Edge, Point

# Reference growth constants of hole-free polyominoes (by area, by perimeter).
KAPPA_P = 3.97094397
MU_P = 2.63815853035


def top_right(g: DualGraph) -> Point:
    """Rightmost vertex of the highest row."""
    top = max(p.y for p in g.vertices)
    return Point(max(p.x for p in g.vertices if p.y == top), top)


def bottom_left(g: DualGraph) -> Point:
    """Leftmost vertex of the lowest row."""
    bottom = min(p.y for p in g.vertices)
    return Point(min(p.x for p in g.vertices if p.y == bottom), bottom)


def concat_area(g1: DualGraph, g2: DualGraph) -> DualGraph:
    """Glue ``g2`` onto ``g1`` at a single shared vertex; sizes add."""
    a, b = top_right(g1), bottom_left(g2)
    moved = g2.translated(a.x - b.x, a.y - b.y)
    if not g1.edges and not moved.edges:
        return DualGraph.circle(a)
    return DualGraph(g1.edges | moved.edges)


def concat_length(g1: DualGraph, g2: DualGraph) -> DualGraph:
    """Place ``g2`` one step above ``g1`` and join them by a North edge; classes add."""
    a, b = top_right(g1), bottom_left(g2)
    moved = g2.translated(a.x - b.x, a.y + 1 - b.y)
    return DualGraph(g1.edges | moved.edges | {Edge(a.x, a.y, NORTH)})


@dataclass
class InequalityReport:
    name: str
    checked: list[tuple] = field(default_factory=list)
    violations: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"{self.name}: {len(self.checked)} inequalities checked, {status}"


def size_counts(table: CountTable, kind: str = "fixed") -> dict[int, int]:
    return {m: table.by_size(m, kind) for m in range(table.m_max + 1)}


def class_totals(class_counts: list[ClassCount], kind: str = "fixed") -> dict[int, int]:
    return {cc.c: cc.count(kind) for cc in class_counts if cc.complete}


def check_superadditivity(table: CountTable, class_counts: list[ClassCount]) -> list[InequalityReport]:
    """Check ``a(m1) a(m2) <= a(m1+m2)`` and ``l(c1) l(c2) <= l(c1+c2)`` for fixed counts."""
    by_area = InequalityReport("a_0(m1) a_0(m2) <= a_0(m1+m2)")
    a = size_counts(table)
    for m1 in range(1, table.m_max + 1):
        for m2 in range(m1, table.m_max + 1 - m1):
            lhs, rhs = a[m1] * a[m2], a[m1 + m2]
            row = (m1, m2, lhs, rhs)
            by_area.checked.append(row)
            if lhs > rhs:
                by_area.violations.append(row)
    by_length = InequalityReport("l_0(c1) l_0(c2) <= l_0(c1+c2)")
    ell = class_totals(class_counts)
    for c1 in sorted(ell):
        for c2 in sorted(ell):
            if c2 < c1 or c1 + c2 not in ell:
                continue
            lhs, rhs = ell[c1] * ell[c2], ell[c1 + c2]
            row = (c1, c2, lhs, rhs)
            by_length.checked.append(row)
            if lhs > rhs:
                by_length.violations.append(row)
    return [by_area, by_length]


def _sandwich(report: InequalityReport, key: int, fixed: int, one: int, free: int) -> None:
    row = (key, fixed, one, free)
    report.checked.append(row)
    if not (fixed <= 8 * free and free <= one <= fixed):
        report.violations.append(row)


def check_sandwich(table: CountTable, class_counts: list[ClassCount] = ()) -> list[InequalityReport]:
    """Check ``fixed / 8 <= free <= one-sided <= fixed`` by size and by complete class."""
    by_area = InequalityReport("a_0(m)/8 <= a_2(m) <= a_1(m) <= a_0(m)")
    for m in range(table.m_max + 1):
        _sandwich(by_area, m, *(table.by_size(m, k) for k in KINDS))
    by_length = InequalityReport("l_0(c)/8 <= l_2(c) <= l_1(c) <= l_0(c)")
    classes = {cc.c: cc for cc in class_counts if cc.complete}
    for c in table.complete_classes():
        classes.setdefault(c, ClassCount(c, *(table.by_class(c, k) for k in KINDS),
                                         complete=True, m_bound=table.m_max))
    for c in sorted(classes):
        cc = classes[c]
        _sandwich(by_length, c, cc.fixed, cc.one_sided, cc.free)
    return [by_area, by_length]


@dataclass
class GrowthReport:
    """Finite prefixes of ``a_i(m)^(1/m)`` and ``l_i(c)^(1/c)``.

    These are not estimates of the limits; nothing here claims convergence
    or that a prefix lies inside the reference bands.
    """

    area_roots: dict[str, dict[int, float]]
    length_roots: dict[str, dict[int, float]]
    superadditivity: list[InequalityReport]
    sandwich: list[InequalityReport]
    kappa_p: float = KAPPA_P
    mu_p: float = MU_P

    @property
    def kappa_band(self) -> tuple[float, float]:
        return self.kappa_p, self.kappa_p ** 2

    @property
    def mu_band(self) -> tuple[float, float]:
        return self.mu_p, self.mu_p ** 2

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.superadditivity + self.sandwich)

    def format(self) -> str:
        lines = ["size m   " + "  ".join(f"{k:>10}" for k in KINDS)]
        for m in sorted(self.area_roots["fixed"]):
            lines.append(f"{m:>6}   " + "  ".join(f"{self.area_roots[k][m]:>10.6f}" for k in KINDS))
        lines.append("class c  " + "  ".join(f"{k:>10}" for k in KINDS))
        for c in sorted(self.length_roots["fixed"]):
            lines.append(f"{c:>6}   " + "  ".join(f"{self.length_roots[k][c]:>10.6f}" for k in KINDS))
        lo, hi = self.kappa_band
        lines.append(f"reference band by area   [{lo:.8f}, {hi:.8f}] (limit only)")
        lo, hi = self.mu_band
        lines.append(f"reference band by length [{lo:.8f}, {hi:.8f}] (limit only)")
        lines.extend(str(r) for r in self.superadditivity + self.sandwich)
        return "\n".join(lines)


def growth_estimates(table: CountTable, class_counts: list[ClassCount]) -> GrowthReport:
    area = {k: {m: table.by_size(m, k) ** (1 / m) for m in range(1, table.m_max + 1)} for k in KINDS}
    length = {k: {c: n ** (1 / c) for c, n in sorted(class_totals(class_counts, k).items())} for k in KINDS}
    return GrowthReport(area, length, check_superadditivity(table, class_counts),
                        check_sandwich(table, class_counts))
