"""Chan and Fleron polyominoes of dual graphs, and their inverses."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .dualgraph import DualGraph, spanning_tree_bfs
from .grid import EAST, Point, canonical_cells, edge_between

MAX_ORACLE_CELLS = 8

_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))  # East, North, West, South


class HoledPolyomino(ValueError):
    pass


class NotACorner(ValueError):
    pass


@dataclass(frozen=True)
class CellSet:
    """A set of unit cells, each named by its lower-left corner."""

    cells: frozenset[Point]

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(Point(*c) for c in self.cells))

    @classmethod
    def of(cls, cells: Iterable[tuple[int, int]]) -> "CellSet":
        return cls(frozenset(cells))

    @property
    def n(self) -> int:
        return len(self.cells)

    @cached_property
    def adjacencies(self) -> int:
        cs = self.cells
        return sum((x + 1, y) in cs for x, y in cs) + sum((x, y + 1) in cs for x, y in cs)

    @property
    def perimeter(self) -> int:
        return 4 * self.n - 2 * self.adjacencies

    def neighbours(self, cell: tuple[int, int]) -> list[Point]:
        x, y = cell
        return [Point(x + dx, y + dy) for dx, dy in _STEPS if (x + dx, y + dy) in self.cells]

    @cached_property
    def is_connected(self) -> bool:
        if not self.cells:
            return False
        start = min(self.cells)
        seen = {start}
        todo = [start]
        while todo:
            for q in self.neighbours(todo.pop()):
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return len(seen) == self.n

    @cached_property
    def is_holefree(self) -> bool:
        """No empty cell is cut off from the outside (edge-connectivity)."""
        xs = [c.x for c in self.cells]
        ys = [c.y for c in self.cells]
        x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
        empty = (x1 - x0 + 1) * (y1 - y0 + 1) - self.n
        start = (x0, y0)
        seen = {start}
        todo = [start]
        while todo:
            x, y = todo.pop()
            for dx, dy in _STEPS:
                q = (x + dx, y + dy)
                if (x0 <= q[0] <= x1 and y0 <= q[1] <= y1
                        and q not in seen and q not in self.cells):
                    seen.add(q)
                    todo.append(q)
        return len(seen) == empty

    def canonical(self) -> tuple[tuple[int, int], ...]:
        return canonical_cells(self.cells)

    def boundary(self) -> list[tuple[Point, Point, Point]]:
        """Directed boundary unit edges ``(start, end, cell)``, interior on the left."""
        out = []
        cs = self.cells
        for x, y in sorted(cs):
            cell = Point(x, y)
            if (x, y - 1) not in cs:
                out.append((Point(x, y), Point(x + 1, y), cell))
            if (x + 1, y) not in cs:
                out.append((Point(x + 1, y), Point(x + 1, y + 1), cell))
            if (x, y + 1) not in cs:
                out.append((Point(x + 1, y + 1), Point(x, y + 1), cell))
            if (x - 1, y) not in cs:
                out.append((Point(x, y + 1), Point(x, y), cell))
        return out

    def render(self) -> str:
        """ASCII picture, north at the top."""
        xs = [c.x for c in self.cells]
        ys = [c.y for c in self.cells]
        rows = []
        for y in range(max(ys), min(ys) - 1, -1):
            rows.append("".join("#" if (x, y) in self.cells else "." for x in range(min(xs), max(xs) + 1)))
        return "\n".join(rows)


def chan_polyomino(g: DualGraph) -> CellSet:
    """One cell per dual-graph vertex."""
    return CellSet(frozenset(g.vertices))


def fleron_polyomino(g: DualGraph) -> CellSet:
    """Vertex, edge and square cells on the doubled lattice.

    Vertex ``(x, y)`` becomes cell ``(2x, 2y)``, an East/North edge the cell
    between its endpoints, and each unit square of the graph its centre cell
    ``(2x+1, 2y+1)``.
    """
    cells = {Point(2 * p.x, 2 * p.y) for p in g.vertices}
    for e in g.edges:
        if e.axis == EAST:
            cells.add(Point(2 * e.x + 1, 2 * e.y))
        else:
            cells.add(Point(2 * e.x, 2 * e.y + 1))
    cells.update(Point(2 * s.x + 1, 2 * s.y + 1) for s in g.squares)
    return CellSet(frozenset(cells))


def _check_holefree(p: CellSet) -> None:
    if not p.is_connected:
        raise ValueError("cells are not connected")
    if not p.is_holefree:
        raise HoledPolyomino("polyomino has holes")


def chan_inverse_tree(p: CellSet) -> DualGraph:
    """A tree dual graph whose Chan polyomino is ``p``.

    The tree is breadth-first from the least cell, trying East, North,
    West, South in that order.
    """
    _check_holefree(p)
    root = min(p.cells)
    if p.n == 1:
        return DualGraph.circle(root)
    adj = {c: p.neighbours(c) for c in p.cells}
    return DualGraph(frozenset(spanning_tree_bfs(adj, root, _STEPS)))


def chan_inverse_full(p: CellSet) -> DualGraph:
    """The dual graph joining every pair of adjacent cells of ``p``."""
    _check_holefree(p)
    if p.n == 1:
        return DualGraph.circle(next(iter(p.cells)))
    edges = set()
    for x, y in p.cells:
        for q in ((x + 1, y), (x, y + 1)):
            if q in p.cells:
                edges.add(edge_between((x, y), q))
    return DualGraph(frozenset(edges))


def is_omega_corner(p: CellSet, corner: tuple[int, int]) -> bool:
    corner = Point(*corner)
    if corner not in p.cells or p.n < 2:
        return False
    nb = p.neighbours(corner)
    if len(nb) != 2:
        return False
    (ax, ay), (bx, by) = ((q.x - corner.x, q.y - corner.y) for q in nb)
    if ax * bx + ay * by != 0:  # the two neighbours must be perpendicular
        return False
    rest = CellSet(p.cells - {corner})
    return rest.is_connected and rest.is_holefree


def omega_rotation(p: CellSet, corner: tuple[int, int]) -> CellSet:
    """Remove a corner cell with two perpendicular neighbours; perimeter is unchanged."""
    if not is_omega_corner(p, corner):
        raise NotACorner(f"{tuple(corner)} is not a removable corner cell")
    return CellSet(p.cells - {Point(*corner)})


def omega_corners(p: CellSet) -> list[Point]:
    return [c for c in sorted(p.cells) if is_omega_corner(p, c)]


def _redelmeier_cells(n_max: int) -> Iterator[frozenset[Point]]:
    """Every fixed polyomino with at most ``n_max`` cells, once each.

    Cells before the root in ``(y, x)`` order are excluded.
    """
    def allowed(c):
        return c[1] > 0 or (c[1] == 0 and c[0] >= 0)

    current: list[Point] = []
    seen = {Point(0, 0)}

    def grow(untried: list[Point]):
        while untried:
            c = untried.pop()
            current.append(c)
            yield frozenset(current)
            if len(current) < n_max:
                new = []
                for dx, dy in _STEPS:
                    q = Point(c.x + dx, c.y + dy)
                    if allowed(q) and q not in seen:
                        seen.add(q)
                        new.append(q)
                yield from grow(untried + new)
                seen.difference_update(new)
            current.pop()

    yield from grow([Point(0, 0)])


def enumerate_holefree(n_max: int) -> list[CellSet]:
    """All fixed hole-free polyominoes with ``1 <= n <= n_max`` cells.

    Each is translated to canonical position; ordered by ``(n, cells)``.
    """
    if n_max > MAX_ORACLE_CELLS:
        raise ValueError(f"hole-free enumeration is limited to n_max <= {MAX_ORACLE_CELLS}")
    out = []
    for cells in _redelmeier_cells(n_max):
        p = CellSet(cells)
        if p.is_holefree:
            out.append(CellSet.of(p.canonical()))
    out.sort(key=lambda p: (p.n, p.canonical()))
    return out
