"""Square-lattice primitives: sticks, the eight symmetries of the square,
and translation/rotation/reflection canonical forms.

An edge ("stick") is stored once, anchored at its lower/left endpoint, as
``Edge(x, y, axis)`` with ``axis`` either :data:`EAST` or :data:`NORTH`.
Sorting edges as plain tuples gives the lexicographic order used
everywhere for canonical output (x, then y, then East before North).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

EAST = 0
NORTH = 1

AXIS_NAMES = {EAST: "E", NORTH: "N"}
AXIS_CODES = {"E": EAST, "N": NORTH}


class Point(NamedTuple):
    x: int
    y: int


class Edge(NamedTuple):
    x: int
    y: int
    axis: int

    @property
    def endpoints(self) -> tuple[Point, Point]:
        if self.axis == EAST:
            return Point(self.x, self.y), Point(self.x + 1, self.y)
        return Point(self.x, self.y), Point(self.x, self.y + 1)

    def __repr__(self) -> str:
        return f"{AXIS_NAMES[self.axis]}({self.x},{self.y})"


def edge_between(p: tuple[int, int], q: tuple[int, int]) -> Edge:
    """Return the unit stick joining two lattice-adjacent points."""
    (px, py), (qx, qy) = p, q
    if abs(px - qx) + abs(py - qy) != 1:
        raise ValueError(f"points {p} and {q} are not lattice neighbours")
    if py == qy:
        return Edge(min(px, qx), py, EAST)
    return Edge(px, min(py, qy), NORTH)


@dataclass(frozen=True)
class D4Element:
    """A symmetry of the square acting linearly as ``(x, y) -> (a x + b y, c x + d y)``."""

    a: int
    b: int
    c: int
    d: int
    name: str = ""

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.a * x + self.b * y, self.c * x + self.d * y

    def compose(self, other: "D4Element") -> "D4Element":
        """``self ∘ other``: apply ``other`` first."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        return element_from_matrix(a, b, c, d)

    @property
    def is_rotation(self) -> bool:
        return self.a * self.d - self.b * self.c == 1

    def image_edge(self, e: Edge) -> Edge:
        p, q = e.endpoints
        return edge_between(self(*p), self(*q))

    def __repr__(self) -> str:
        return f"D4Element({self.name})"


IDENTITY = D4Element(1, 0, 0, 1, "id")
ROT90 = D4Element(0, -1, 1, 0, "r90")
ROT180 = D4Element(-1, 0, 0, -1, "r180")
ROT270 = D4Element(0, 1, -1, 0, "r270")
FLIP_X = D4Element(-1, 0, 0, 1, "s_x")  # mirror in the y axis
FLIP_Y = D4Element(1, 0, 0, -1, "s_y")
FLIP_DIAG = D4Element(0, 1, 1, 0, "s_diag")
FLIP_ANTI = D4Element(0, -1, -1, 0, "s_anti")

ROTATIONS: tuple[D4Element, ...] = (IDENTITY, ROT90, ROT180, ROT270)
D4: tuple[D4Element, ...] = ROTATIONS + (FLIP_X, FLIP_Y, FLIP_DIAG, FLIP_ANTI)

_BY_MATRIX = {(s.a, s.b, s.c, s.d): s for s in D4}


def element_from_matrix(a: int, b: int, c: int, d: int) -> D4Element:
    try:
        return _BY_MATRIX[(a, b, c, d)]
    except KeyError:
        raise ValueError(f"({a}, {b}, {c}, {d}) is not a symmetry of the square") from None


def group_elements(group: str) -> tuple[D4Element, ...]:
    if group == "rotations":
        return ROTATIONS
    if group == "full":
        return D4
    raise ValueError(f"unknown symmetry group {group!r}; expected 'rotations' or 'full'")


def _edges_of(g) -> Iterable[Edge]:
    return getattr(g, "edges", g)


def apply_symmetry(g, s: D4Element) -> frozenset[Edge]:
    """Image of an edge set (or anything with an ``edges`` attribute) under ``s``.

    No translation is applied; combine with :func:`canonical_form` to compare shapes.
    """
    return frozenset(s.image_edge(Edge(*e)) for e in _edges_of(g))


def canonical_form(g) -> tuple[Edge, ...]:
    """Translate so the bounding box starts at the origin and sort.

    Two edge sets have equal canonical forms iff one is a translate of the
    other. The empty edge set (the one-vertex circle graph) maps to ``()``.
    """
    edges = [Edge(*e) for e in _edges_of(g)]
    if not edges:
        return ()
    # the origin of each stick is its smaller endpoint, so it attains the minimum
    mx = min(e.x for e in edges)
    my = min(e.y for e in edges)
    return tuple(sorted(Edge(e.x - mx, e.y - my, e.axis) for e in edges))


def canonical_under(g, group: str = "full") -> tuple[Edge, ...]:
    """Lexicographically least :func:`canonical_form` over the images of ``g``.

    ``group="rotations"`` gives the one-sided class invariant, ``"full"`` the free one.
    """
    edges = frozenset(Edge(*e) for e in _edges_of(g))
    return min(canonical_form(apply_symmetry(edges, s)) for s in group_elements(group))


def stabilizer(g) -> list[D4Element]:
    """Symmetries mapping ``g`` onto a translate of itself."""
    base = canonical_form(g)
    return [s for s in D4 if canonical_form(apply_symmetry(g, s)) == base]


# Cells of polyominoes use the same conventions: a cell is named by its
# lower-left corner, so the symmetry image of cell (x, y) is the cell whose
# lower-left corner is the minimum of the transformed unit square.

def transform_cell(s: D4Element, x: int, y: int) -> tuple[int, int]:
    corners = [s(x + dx, y + dy) for dx in (0, 1) for dy in (0, 1)]
    return min(c[0] for c in corners), min(c[1] for c in corners)


def canonical_cells(cells: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    cells = list(cells)
    if not cells:
        return ()
    mx = min(c[0] for c in cells)
    my = min(c[1] for c in cells)
    return tuple(sorted((x - mx, y - my) for x, y in cells))
