"""Tangle dual graphs: polysticks whose bounded faces are all unit squares.

A :class:`DualGraph` carries its edge set plus, for the edgeless circle
graph, an explicit single vertex so that ``v``, ``k`` and ``m`` are always
well defined.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .grid import EAST, NORTH, Edge, Point, edge_between


class DisconnectedInput(ValueError):
    """The edge set does not form a single connected polystick."""


class InvalidDualGraph(ValueError):
    """The polystick has a bounded face that is not a unit square."""


@dataclass(frozen=True)
class DualGraph:
    edges: frozenset[Edge]
    # Only meaningful for the edgeless circle graph.
    anchor: Point = field(default=Point(0, 0), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(Edge(*e) for e in self.edges))
        object.__setattr__(self, "anchor", Point(*self.anchor))

    @classmethod
    def circle(cls, at: tuple[int, int] = (0, 0)) -> "DualGraph":
        return cls(frozenset(), Point(*at))

    @classmethod
    def from_edges(cls, edges: Iterable, check: bool = True) -> "DualGraph":
        """Build a graph, raising :class:`DisconnectedInput` or
        :class:`InvalidDualGraph` unless ``check`` is false."""
        g = cls(frozenset(Edge(*e) for e in edges))
        if check and not is_valid(g):
            raise InvalidDualGraph("polystick has a bounded face that is not a unit square")
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def vertices(self) -> frozenset[Point]:
        if not self.edges:
            return frozenset([self.anchor])
        return frozenset(p for e in self.edges for p in e.endpoints)

    @property
    def v(self) -> int:
        return len(self.vertices)

    @cached_property
    def squares(self) -> frozenset[Point]:
        """Lower-left corners of unit squares whose four sides are present."""
        es = self.edges
        return frozenset(
            Point(e.x, e.y)
            for e in es
            if e.axis == EAST
            and (e.x, e.y, NORTH) in es
            and (e.x + 1, e.y, NORTH) in es
            and (e.x, e.y + 1, EAST) in es
        )

    @property
    def k(self) -> int:
        return len(self.squares)

    @property
    def class_(self) -> int:
        return class_of(self)

    def translated(self, dx: int, dy: int) -> "DualGraph":
        return DualGraph(
            frozenset(Edge(e.x + dx, e.y + dy, e.axis) for e in self.edges),
            Point(self.anchor.x + dx, self.anchor.y + dy),
        )

    def __repr__(self) -> str:
        if not self.edges:
            return f"DualGraph.circle(at={tuple(self.anchor)})"
        return f"DualGraph({sorted(self.edges)})"


def _as_graph(g) -> DualGraph:
    if isinstance(g, DualGraph):
        return g
    return DualGraph(frozenset(Edge(*e) for e in g))


def adjacency(g) -> dict[Point, list[Point]]:
    g = _as_graph(g)
    adj: dict[Point, list[Point]] = {p: [] for p in g.vertices}
    for e in g.edges:
        p, q = e.endpoints
        adj[p].append(q)
        adj[q].append(p)
    return adj


def is_connected(g) -> bool:
    adj = adjacency(g)
    start = next(iter(adj))
    seen = {start}
    todo = [start]
    while todo:
        for q in adj[todo.pop()]:
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return len(seen) == len(adj)


# Directions listed clockwise starting from East.
_CLOCKWISE = ((1, 0), (0, -1), (-1, 0), (0, 1))
_CW_INDEX = {d: i for i, d in enumerate(_CLOCKWISE)}


def faces(g) -> list[list[Point]]:
    """Trace every face of the plane embedding.

    Each face is returned as its cyclic vertex sequence with the face on the
    left, so bounded faces have positive signed area and the outer face
    non-positive area. After arriving at ``w`` from ``u`` the walk leaves
    along the clockwise successor of the reversed edge ``w -> u``.
    """
    adj = adjacency(g)
    if not any(adj.values()):
        return [[next(iter(adj))]]
    present = {p: set(ns) for p, ns in adj.items()}
    unused = {(p, q) for p, ns in adj.items() for q in ns}
    out = []
    for start in sorted(unused):
        if start not in unused:
            continue
        face = []
        u, w = start
        while (u, w) in unused:
            unused.discard((u, w))
            face.append(u)
            back = _CW_INDEX[(u.x - w.x, u.y - w.y)]
            for step in range(1, 5):
                dx, dy = _CLOCKWISE[(back + step) % 4]
                nxt = Point(w.x + dx, w.y + dy)
                if nxt in present[w]:
                    break
            u, w = w, nxt
        out.append(face)
    return out


def signed_area(polygon: list[Point]) -> float:
    s = 0
    n = len(polygon)
    for i in range(n):
        p, q = polygon[i], polygon[(i + 1) % n]
        s += p.x * q.y - q.x * p.y
    return s / 2


def bounded_faces(g) -> list[list[Point]]:
    return [f for f in faces(g) if len(f) > 2 and signed_area(f) > 0]


def _require_connected(g: DualGraph) -> None:
    if g.edges and not is_connected(g):
        raise DisconnectedInput("edge set is not connected")


def is_valid(g, method: str = "faces") -> bool:
    """Whether a connected polystick is the dual graph of some Tangle.

    ``method="faces"`` (the reference check) walks the faces of the
    embedding and requires every bounded face to be a unit square.
    ``method="cycles"`` instead requires every fundamental cycle of a
    Paton spanning tree to have length four.
    """
    g = _as_graph(g)
    _require_connected(g)
    if method == "faces":
        return all(len(f) == 4 and signed_area(f) == 1 for f in bounded_faces(g))
    if method == "cycles":
        return all(len(c) == 4 for c in fundamental_cycles(g))
    raise ValueError(f"unknown validity method {method!r}")


def fundamental_cycles(g) -> list[list[Point]]:
    """Fundamental cycles relative to a spanning tree grown by Paton's method.

    Vertices are expanded last-in first-out from the least vertex, neighbours
    in sorted order, so the result is deterministic.
    """
    adj = {p: sorted(ns) for p, ns in adjacency(g).items()}
    root = min(adj)
    stack = [root]
    pred = {root: root}
    used: dict[Point, set[Point]] = {root: set()}
    cycles = []
    while stack:
        z = stack.pop()
        zused = used[z]
        for nbr in adj[z]:
            if nbr not in used:
                pred[nbr] = z
                stack.append(nbr)
                used[nbr] = {z}
            elif nbr not in zused:
                pn = used[nbr]
                cycle = [nbr, z]
                p = pred[z]
                while p not in pn:
                    cycle.append(p)
                    p = pred[p]
                cycle.append(p)
                cycles.append(cycle)
                used[nbr].add(z)
    return cycles


def count_squares(g) -> int:
    return _as_graph(g).k


def class_of(g) -> int:
    """Tangle class ``m - 2k + 1``; the Tangle has ``4 * class`` links."""
    g = _as_graph(g)
    return g.m - 2 * g.k + 1


def edge_bounds(c: int) -> tuple[int, int]:
    """Smallest and largest possible size of a class-``c`` dual graph."""
    if c < 1:
        raise ValueError("class must be a positive integer")
    return c - 1, (c * c - 1) // 2


def max_squares(m: int) -> int:
    """Upper bound on the number of unit squares in a graph with ``m`` edges."""
    if m < 0:
        raise ValueError("size must be nonnegative")
    s = math.isqrt(2 * m + 1)
    # floor((m + 1 - sqrt(2m+1)) / 2) computed exactly
    if s * s == 2 * m + 1:
        return (m + 1 - s) // 2
    return (m - s) // 2


def area(m: int, r: float) -> float:
    """Area enclosed by a Tangle of size ``m`` drawn with arc radius ``r``."""
    if r <= 0:
        raise ValueError("radius must be positive")
    return (4 * m + math.pi) * r * r


def leaf_edges(g) -> list[Edge]:
    """Edges incident to a degree-one vertex."""
    adj = adjacency(g)
    return sorted(e for e in _as_graph(g).edges if any(len(adj[p]) == 1 for p in e.endpoints))


def spanning_tree_bfs(adj: dict[Point, list[Point]], root: Point, order) -> list[Edge]:
    """Breadth-first spanning tree edges, neighbours visited in ``order``."""
    seen = {root}
    queue = deque([root])
    tree = []
    while queue:
        p = queue.popleft()
        for dx, dy in order:
            q = Point(p.x + dx, p.y + dy)
            if q in adj and q not in seen and q in adj[p]:
                seen.add(q)
                queue.append(q)
                tree.append(edge_between(p, q))
    return tree
