"""Exhaustive generation of Tangle dual graphs.

The search is Redelmeier's algorithm transplanted from cells to sticks:
sticks live on an integer-indexed grid, every fixed polystick is generated
exactly once as a connected set containing a root stick and otherwise only
sticks that come after the root in ``(x, y, axis)`` order. Since any
polystick's least stick is either East or North, two roots cover
everything: ``E(0,0)`` and ``N(0,0)``.

Vertex and square counts are maintained incrementally; a connected
polystick is a dual graph exactly when ``v - m + k == 1`` (Euler's formula
with every bounded face a unit square). One-sided and free counts use
orbit representatives: a fixed graph is counted once per orbit when its
translation-canonical form is the least among its rotated (or all eight)
images.
"""
from __future__ import annotations

import logging
import os
import sys
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .dualgraph import DualGraph, class_of, edge_bounds, is_valid
from .grid import D4, EAST, NORTH, Edge, canonical_form, canonical_under

log = logging.getLogger(__name__)

KINDS = ("fixed", "one_sided", "free")
MAX_BRUTE_FORCE = 6


@dataclass
class CountTable:
    """Counts keyed by ``(m, c)`` for each symmetry kind.

    ``m_max`` is the enumeration bound; ``v_max`` is set when the search was
    restricted to graphs with at most that many vertices.
    """

    m_max: int
    fixed: dict[tuple[int, int], int] = field(default_factory=dict)
    one_sided: dict[tuple[int, int], int] = field(default_factory=dict)
    free: dict[tuple[int, int], int] = field(default_factory=dict)
    v_max: int | None = None

    def kind(self, name: str) -> dict[tuple[int, int], int]:
        if name not in KINDS:
            raise ValueError(f"unknown symmetry kind {name!r}")
        return getattr(self, name)

    def rows(self) -> list[tuple[int, int, int, int, int]]:
        """``(m, c, fixed, one_sided, free)`` for nonzero entries, sorted by ``(m, c)``."""
        return [
            (m, c, self.fixed[m, c], self.one_sided.get((m, c), 0), self.free.get((m, c), 0))
            for m, c in sorted(self.fixed)
            if self.fixed[m, c]
        ]

    def by_size(self, m: int, kind: str = "fixed") -> int:
        return sum(n for (mm, _), n in self.kind(kind).items() if mm == m)

    def by_class(self, c: int, kind: str = "fixed") -> int:
        return sum(n for (_, cc), n in self.kind(kind).items() if cc == c)

    def class_complete(self, c: int) -> bool:
        return self.m_max >= edge_bounds(c)[1]

    def complete_classes(self) -> list[int]:
        out = []
        c = 1
        while self.class_complete(c):
            out.append(c)
            c += 1
        return out

    def add(self, m: int, c: int, fixed: int, one_sided: int, free: int) -> None:
        for name, n in zip(KINDS, (fixed, one_sided, free)):
            d = self.kind(name)
            d[m, c] = d.get((m, c), 0) + n


@dataclass(frozen=True)
class ClassCount:
    c: int
    fixed: int
    one_sided: int
    free: int
    complete: bool
    m_bound: int
    by_size: dict = field(default_factory=dict, compare=False)

    def count(self, kind: str) -> int:
        if kind not in KINDS:
            raise ValueError(f"unknown symmetry kind {kind!r}")
        return getattr(self, kind)


# ---------------------------------------------------------------------------
# integer-indexed stick lattice


class _Lattice:
    """Stick ids ``2 * vid + axis`` with ``vid = (x + off) * w + (y + off)``.

    Id order equals ``(x, y, axis)`` order for every stick reachable from a
    root at the origin within ``m_max`` steps.
    """

    def __init__(self, m_max: int):
        self.m_max = m_max
        self.off = off = m_max + 1
        self.w = w = 2 * m_max + 4
        self.size = 2 * w * w
        w2 = 2 * w
        self.nbr = {
            EAST: (-w2, 1, -1, w2, w2 + 1, w2 - 1),
            NORTH: (-2, -1, -w2 - 1, 2, 1, -w2 + 1),
        }
        # the three other sides of each unit square a new stick may complete
        self.sq = {
            EAST: ((1, 2, w2 + 1), (-2, -1, w2 - 1)),
            NORTH: ((-1, 1, w2), (-w2 - 1, -w2, -w2 + 1)),
        }
        self.scale = s = 2 * m_max + 4
        self._sym = []
        for t in D4:
            xs, ys, codes = [0] * self.size, [0] * self.size, [0] * self.size
            for e in range(self.size):
                x, y, a = self.coords(e)
                img = t.image_edge(Edge(x, y, a))
                xs[e], ys[e] = img.x, img.y
                codes[e] = (img.x * s + img.y) * 2 + img.axis
            self._sym.append((xs, ys, codes))

    def sid(self, x: int, y: int, axis: int) -> int:
        return 2 * ((x + self.off) * self.w + (y + self.off)) + axis

    def coords(self, e: int) -> tuple[int, int, int]:
        vid, axis = divmod(e, 2)
        vx, vy = divmod(vid, self.w)
        return vx - self.off, vy - self.off, axis

    def endpoints(self, e: int) -> tuple[int, int]:
        vid = e >> 1
        return vid, vid + (self.w if e & 1 == EAST else 1)

    def symmetry_flags(self, placed: list[int]) -> tuple[int, int]:
        """(one-sided representative, free representative) for a placed graph."""
        sym = self._sym
        two_s = 2 * self.scale
        xs, ys, codes = sym[0]
        shift = min(xs[e] for e in placed) * two_s + 2 * min(ys[e] for e in placed)
        base = sorted(codes[e] - shift for e in placed)
        for i in range(1, 8):
            xs, ys, codes = sym[i]
            shift = min(xs[e] for e in placed) * two_s + 2 * min(ys[e] for e in placed)
            img = sorted(codes[e] - shift for e in placed)
            if img < base:
                return (0, 0) if i < 4 else (1, 0)
        return 1, 1


class _Search:
    """One Redelmeier run from a fixed root stick."""

    def __init__(self, lat: _Lattice, root_axis: int, m_max: int, v_max: int | None,
                 emit: Callable[["_Search", int, int, int], None]):
        self.lat = lat
        self.root = lat.sid(0, 0, root_axis)
        self.m_max = m_max
        self.v_max = v_max if v_max is not None else m_max + 1
        self.emit = emit
        self.present = bytearray(lat.size)
        self.seen = bytearray(lat.size)
        self.deg = bytearray(lat.size // 2)
        self.placed: list[int] = []
        self.v = 0
        self.k = 0
        self.split_depth: int | None = None
        self.tasks: list[tuple] = []

    def _place(self, e: int) -> None:
        lat = self.lat
        self.present[e] = 1
        self.placed.append(e)
        for p in lat.endpoints(e):
            if self.deg[p] == 0:
                self.v += 1
            self.deg[p] += 1
        present = self.present
        for a, b, c in lat.sq[e & 1]:
            if present[e + a] and present[e + b] and present[e + c]:
                self.k += 1

    def _unplace(self, e: int) -> None:
        lat = self.lat
        present = self.present
        for a, b, c in lat.sq[e & 1]:
            if present[e + a] and present[e + b] and present[e + c]:
                self.k -= 1
        present[e] = 0
        self.placed.pop()
        for p in lat.endpoints(e):
            self.deg[p] -= 1
            if self.deg[p] == 0:
                self.v -= 1

    def run(self) -> None:
        self.seen[self.root] = 1
        self._grow([self.root], 0)

    def resume(self, task: tuple) -> None:
        """Continue the search below a node recorded by a splitting run."""
        placed, untried, marked = task
        for e in marked:
            self.seen[e] = 1
        for e in placed:
            self._place(e)
        self._grow(list(untried), len(placed))

    def _grow(self, untried: list[int], depth: int) -> None:
        seen = self.seen
        root = self.root
        nbr = self.lat.nbr
        m = depth + 1
        while untried:
            e = untried.pop()
            self._place(e)
            if self.v <= self.v_max:
                if self.v - m + self.k == 1:
                    self.emit(self, m, self.k, self.v)
                if m < self.m_max:
                    new = []
                    for d in nbr[e & 1]:
                        n = e + d
                        if n > root and not seen[n]:
                            seen[n] = 1
                            new.append(n)
                    if m == self.split_depth:
                        marked = [i for i, s in enumerate(seen) if s]
                        self.tasks.append((tuple(self.placed), tuple(untried + new), tuple(marked)))
                    else:
                        self._grow(untried + new, m)
                    for n in new:
                        seen[n] = 0
            self._unplace(e)


def _counting_emit(counts: dict):
    def emit(search: _Search, m: int, k: int, v: int) -> None:
        one, free = search.lat.symmetry_flags(search.placed)
        row = counts[m, m - 2 * k + 1]
        row[0] += 1
        row[1] += one
        row[2] += free
    return emit


def _run_tasks(args) -> dict:
    m_max, v_max, root_axis, tasks = args
    lat = _lattice(m_max)
    counts = defaultdict(lambda: [0, 0, 0])
    for task in tasks:
        s = _Search(lat, root_axis, m_max, v_max, _counting_emit(counts))
        s.resume(task)
    return dict(counts)


_LATTICES: dict[int, _Lattice] = {}


def _lattice(m_max: int) -> _Lattice:
    if m_max not in _LATTICES:
        _LATTICES[m_max] = _Lattice(m_max)
    return _LATTICES[m_max]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("TANGLE_THREADS", "1")))
    except ValueError:
        return 1


def _count(m_max: int, v_max: int | None, workers: int) -> dict:
    counts = defaultdict(lambda: [0, 0, 0])
    if m_max < 1:
        return counts
    lat = _lattice(m_max)
    split = min(4, m_max - 1) if workers > 1 and m_max > 2 else None
    jobs = []
    for axis in (EAST, NORTH):
        s = _Search(lat, axis, m_max, v_max, _counting_emit(counts))
        s.split_depth = split
        s.run()
        if s.tasks:
            chunks = [s.tasks[i::workers] for i in range(workers)]
            jobs.extend((m_max, v_max, axis, chunk) for chunk in chunks if chunk)
    if jobs:
        ctx = None
        if sys.platform.startswith("linux"):
            import multiprocessing
            ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            for part in pool.map(_run_tasks, jobs):
                for key, row in part.items():
                    acc = counts[key]
                    for i in range(3):
                        acc[i] += row[i]
    return counts


def count_tables(m_max: int, workers: int | None = None) -> CountTable:
    """Fixed, one-sided and free counts for every size ``0 <= m <= m_max``.

    The search tree is split below depth four across ``workers`` processes
    when ``workers > 1``; the merged table does not depend on the split.
    """
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    workers = default_workers() if workers is None else max(1, workers)
    table = CountTable(m_max)
    table.add(0, 1, 1, 1, 1)
    counts = _count(m_max, None, workers)
    for (m, c), (f, o, r) in sorted(counts.items()):
        table.add(m, c, f, o, r)
    log.debug("enumerated sizes up to %d", m_max)
    return table


def enumerate_by_class(c: int, workers: int | None = None) -> ClassCount:
    """Complete counts of class-``c`` graphs.

    A class-``c`` graph of size ``m`` has ``(m + c + 1) / 2`` vertices, so the
    search over sizes up to ``(c*c - 1) // 2`` discards any branch that has
    already grown past the largest admissible vertex count.
    """
    if c < 1:
        raise ValueError("class must be a positive integer")
    workers = default_workers() if workers is None else max(1, workers)
    lo, hi = edge_bounds(c)
    by_size: dict[int, tuple[int, int, int]] = {}
    if c == 1:
        by_size[0] = (1, 1, 1)
    else:
        v_max = (hi + c + 1) // 2
        counts = _count(hi, v_max, workers)
        for (m, cc), row in sorted(counts.items()):
            if cc == c:
                by_size[m] = tuple(row)
    totals = [sum(row[i] for row in by_size.values()) for i in range(3)]
    return ClassCount(c, *totals, complete=True, m_bound=hi, by_size=by_size)


def class_counts_from_table(table: CountTable) -> list[ClassCount]:
    """Class totals for every class the table covers completely."""
    out = []
    for c in table.complete_classes():
        by_size = {m: (table.fixed[m, cc], table.one_sided[m, cc], table.free[m, cc])
                   for (m, cc) in sorted(table.fixed) if cc == c}
        out.append(ClassCount(c, table.by_class(c, "fixed"), table.by_class(c, "one_sided"),
                              table.by_class(c, "free"), complete=True,
                              m_bound=edge_bounds(c)[1], by_size=by_size))
    return out


# ---------------------------------------------------------------------------
# storing mode


CIRCLE = DualGraph.circle()


def iter_fixed(m_max: int) -> Iterator[DualGraph]:
    """Yield every fixed dual graph with ``1 <= m <= m_max`` in search order.

    Graphs are translated to canonical position. The circle is not
    included; it is :data:`CIRCLE`.
    """
    if m_max < 1:
        return
    lat = _lattice(m_max)
    for axis in (EAST, NORTH):
        found: list[tuple[int, ...]] = []

        def emit(search, m, k, v):
            found.append(tuple(search.placed))

        _Search(lat, axis, m_max, None, emit).run()
        for placed in found:
            yield DualGraph(canonical_form(lat.coords(e) for e in placed))


def enumerate_fixed(m_max: int, visitor: Callable[[DualGraph], None] | None = None) -> list[DualGraph]:
    """All fixed dual graphs with ``1 <= m <= m_max``, ordered by ``(m, edges)``.

    ``visitor`` is called serially on each graph in that order.
    """
    graphs = sorted(iter_fixed(m_max), key=lambda g: (g.m, sorted(g.edges)))
    if visitor is not None:
        for g in graphs:
            visitor(g)
    return graphs


# ---------------------------------------------------------------------------
# independent oracle


def all_polysticks(m_max: int) -> dict[int, set[tuple[Edge, ...]]]:
    """Canonical forms of every connected polystick, grown one stick at a time."""
    levels: dict[int, set[tuple[Edge, ...]]] = {}
    if m_max < 1:
        return levels
    levels[1] = {(Edge(0, 0, EAST),), (Edge(0, 0, NORTH),)}
    for m in range(2, m_max + 1):
        nxt = set()
        for shape in levels[m - 1]:
            have = set(shape)
            points = {p for e in shape for p in e.endpoints}
            for x, y in points:
                for cand in (Edge(x, y, EAST), Edge(x - 1, y, EAST),
                             Edge(x, y, NORTH), Edge(x, y - 1, NORTH)):
                    if cand not in have:
                        nxt.add(canonical_form(have | {cand}))
        levels[m] = nxt
    return levels


def brute_force_oracle(m_max: int) -> CountTable:
    """Count tables by breadth-first subset growth with canonical dedup.

    Exponential; limited to ``m_max <= 6``.
    """
    if m_max > MAX_BRUTE_FORCE:
        raise ValueError(f"brute force oracle is limited to m_max <= {MAX_BRUTE_FORCE}")
    table = CountTable(m_max)
    table.add(0, 1, 1, 1, 1)
    for m, shapes in sorted(all_polysticks(m_max).items()):
        one: dict[int, set] = defaultdict(set)
        free: dict[int, set] = defaultdict(set)
        fixed: dict[int, int] = defaultdict(int)
        for shape in shapes:
            if not is_valid(shape):
                continue
            c = class_of(shape)
            fixed[c] += 1
            one[c].add(canonical_under(shape, "rotations"))
            free[c].add(canonical_under(shape, "full"))
        for c in sorted(fixed):
            table.add(m, c, fixed[c], len(one[c]), len(free[c]))
    return table
