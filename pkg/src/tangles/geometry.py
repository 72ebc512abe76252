"""Smooth quarter-circle curves traced from dual graphs, and their SVG form.

Curves are built from the Fleron polyomino: each boundary side of the
polyomino (length ``sqrt(2) * r``) is the chord of one quarter arc. Sides
of vertex cells carry convex arcs centred on the cell; sides of edge cells
carry concave arcs centred on the reflected cell. The dual-graph vertex
``(x, y)`` sits at ``2 * sqrt(2) * r * (x, y)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .dualgraph import DualGraph, InvalidDualGraph, is_valid
from .polyomino import fleron_polyomino

TOL = 1e-9


class OpenCurve(ValueError):
    pass


@dataclass(frozen=True)
class GeometryConfig:
    r: float = 1.0
    stroke_width: float | None = None
    margin: float | None = None
    stroke: str = "black"

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("radius must be positive")

    @property
    def spacing(self) -> float:
        """Distance between adjacent dual-graph vertices."""
        return 2 * math.sqrt(2) * self.r


@dataclass(frozen=True)
class Arc:
    """A quarter of the circle of radius ``r`` about ``center``.

    ``start`` is an angle in degrees (always 45 mod 90); ``sweep`` is +90 for
    a counterclockwise (convex) arc and -90 for a clockwise (concave) one.
    """

    center: tuple[float, float]
    r: float
    start: int
    sweep: int

    @property
    def end(self) -> int:
        return self.start + self.sweep

    @property
    def convex(self) -> bool:
        return self.sweep > 0

    def point(self, deg: float) -> tuple[float, float]:
        t = math.radians(deg)
        return self.center[0] + self.r * math.cos(t), self.center[1] + self.r * math.sin(t)

    @property
    def p0(self) -> tuple[float, float]:
        return self.point(self.start)

    @property
    def p1(self) -> tuple[float, float]:
        return self.point(self.end)

    def tangent(self, deg: float) -> tuple[float, float]:
        t = math.radians(deg)
        s = 1 if self.sweep > 0 else -1
        return -s * math.sin(t), s * math.cos(t)

    def contains_angle(self, deg: float, tol: float = 1e-7) -> bool:
        lo, hi = sorted((self.start, self.end))
        d = (deg - lo) % 360.0
        return d <= (hi - lo) + tol or d >= 360.0 - tol

    def line_integral(self) -> float:
        """Contribution ``1/2 * integral (x dy - y dx)`` along the arc."""
        cx, cy = self.center
        t0, t1 = math.radians(self.start), math.radians(self.end)
        r = self.r
        return 0.5 * (r * r * (t1 - t0) + r * cx * (math.sin(t1) - math.sin(t0))
                      - r * cy * (math.cos(t1) - math.cos(t0)))


@dataclass(frozen=True)
class TangleCurve:
    arcs: tuple[Arc, ...]

    def __len__(self) -> int:
        return len(self.arcs)

    @property
    def convex_count(self) -> int:
        return sum(a.convex for a in self.arcs)

    @property
    def concave_count(self) -> int:
        return len(self.arcs) - self.convex_count

    @property
    def length(self) -> float:
        return sum(math.pi / 2 * a.r for a in self.arcs)


def trace(g: DualGraph, cfg: GeometryConfig | None = None) -> TangleCurve:
    """Walk the Fleron boundary counterclockwise, one arc per boundary side.

    The walk starts at the least boundary side (by start point).
    """
    cfg = cfg or GeometryConfig()
    if not is_valid(g):
        raise InvalidDualGraph("cannot trace an invalid dual graph")
    poly = fleron_polyomino(g)
    sides = poly.boundary()
    nxt = {}
    for p, q, cell in sides:
        if p in nxt:
            raise InvalidDualGraph("Fleron boundary is not a simple polygon")
        nxt[p] = (q, cell)
    start = min(nxt)
    s = math.sqrt(2) * cfg.r
    arcs = []
    p = start
    while True:
        q, cell = nxt[p]
        cx, cy = cell.x + 0.5, cell.y + 0.5
        kind = (cell.x % 2, cell.y % 2)
        if kind == (0, 0):
            sweep = 90
        elif kind == (1, 1):
            raise InvalidDualGraph("square cell on the Fleron boundary")
        else:
            # reflect the cell centre across the side
            cx, cy = p.x + q.x - cx, p.y + q.y - cy
            sweep = -90
        start_deg = int(round(math.degrees(math.atan2(p.y - cy, p.x - cx)))) % 360
        arcs.append(Arc(((cx - 0.5) * s, (cy - 0.5) * s), cfg.r, start_deg, sweep))
        p = q
        if p == start:
            break
    if len(arcs) != len(sides):
        raise InvalidDualGraph("Fleron polyomino boundary has several components")
    return TangleCurve(tuple(arcs))


def _dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def is_closed(curve: TangleCurve, tol: float = TOL) -> bool:
    arcs = curve.arcs
    return bool(arcs) and all(
        _dist(arcs[i].p1, arcs[(i + 1) % len(arcs)].p0) < tol * max(1.0, arcs[i].r)
        for i in range(len(arcs)))


def numeric_area(curve: TangleCurve) -> float:
    """Signed enclosed area by Green's theorem, exact on each arc."""
    if not is_closed(curve):
        raise OpenCurve("curve is not closed")
    return sum(a.line_integral() for a in curve.arcs)


@dataclass
class CurveReport:
    closed: bool = True
    smooth: bool = True
    simple: bool = True
    max_tangent_error: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.closed and self.smooth and self.simple


def _circle_intersections(a: Arc, b: Arc, tol: float):
    (x0, y0), (x1, y1) = a.center, b.center
    d = math.hypot(x1 - x0, y1 - y0)
    r0, r1 = a.r, b.r
    if d > r0 + r1 + tol or d < abs(r0 - r1) - tol:
        return []
    along = (d * d + r0 * r0 - r1 * r1) / (2 * d)
    h = math.sqrt(max(r0 * r0 - along * along, 0.0))
    mx, my = x0 + along * (x1 - x0) / d, y0 + along * (y1 - y0) / d
    if h < tol:
        return [(mx, my)]
    ox, oy = -h * (y1 - y0) / d, h * (x1 - x0) / d
    return [(mx + ox, my + oy), (mx - ox, my - oy)]


def _angle_on(arc: Arc, pt) -> float:
    return math.degrees(math.atan2(pt[1] - arc.center[1], pt[0] - arc.center[0]))


def check_smooth_simple(curve: TangleCurve, tol: float = TOL) -> CurveReport:
    """Closure, tangent continuity at every joint, and absence of self-intersection."""
    rep = CurveReport()
    arcs = curve.arcs
    n = len(arcs)
    if n == 0:
        rep.closed = False
        rep.failures.append("empty curve")
        return rep
    for i in range(n):
        a, b = arcs[i], arcs[(i + 1) % n]
        gap = _dist(a.p1, b.p0)
        if gap >= tol * max(1.0, a.r):
            rep.closed = False
            rep.failures.append(f"gap of {gap:.3g} between arcs {i} and {(i + 1) % n}")
        ta, tb = a.tangent(a.end), b.tangent(b.start)
        err = abs(math.atan2(ta[0] * tb[1] - ta[1] * tb[0], ta[0] * tb[0] + ta[1] * tb[1]))
        rep.max_tangent_error = max(rep.max_tangent_error, err)
        if err >= tol:
            rep.smooth = False
            rep.failures.append(f"tangent jump of {err:.3g} rad at joint {(i + 1) % n}")
    ptol = 1e-7 * max(a.r for a in arcs)
    for i in range(n):
        a = arcs[i]
        for j in range(i + 1, n):
            b = arcs[j]
            if _dist(a.center, b.center) > a.r + b.r + ptol:
                continue
            consecutive = j == i + 1 or (i == 0 and j == n - 1)
            if _dist(a.center, b.center) < ptol and abs(a.r - b.r) < ptol:
                # same circle: interiors of the angular ranges must not overlap
                mid_b = b.start + b.sweep / 2
                mid_a = a.start + a.sweep / 2
                if a.contains_angle(mid_b, -1e-7) or b.contains_angle(mid_a, -1e-7):
                    rep.simple = False
                    rep.failures.append(f"arcs {i} and {j} overlap")
                continue
            for pt in _circle_intersections(a, b, ptol):
                if not (a.contains_angle(_angle_on(a, pt)) and b.contains_angle(_angle_on(b, pt))):
                    continue
                shared = (consecutive and (
                    (_dist(pt, a.p1) < ptol and _dist(pt, b.p0) < ptol)
                    or (_dist(pt, a.p0) < ptol and _dist(pt, b.p1) < ptol)))
                if not shared:
                    rep.simple = False
                    rep.failures.append(f"arcs {i} and {j} meet at ({pt[0]:.6g}, {pt[1]:.6g})")
    return rep


def _fmt(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def svg_path_data(curve: TangleCurve) -> str:
    """Path data with one elliptical-arc command per link; the y axis is flipped."""
    first = curve.arcs[0].p0
    parts = [f"M {_fmt(first[0])} {_fmt(-first[1])}"]
    for a in curve.arcs:
        x, y = a.p1
        # counterclockwise in the plane is counterclockwise on screen after the flip,
        # which is SVG's negative-angle direction
        sweep_flag = 0 if a.convex else 1
        parts.append(f"A {_fmt(a.r)} {_fmt(a.r)} 0 0 {sweep_flag} {_fmt(x)} {_fmt(-y)}")
    parts.append("Z")
    return " ".join(parts)


def render_svg(curve: TangleCurve, cfg: GeometryConfig | None = None, *,
               graph: DualGraph | None = None, show_dual: bool = False,
               show_packing: bool = False) -> str:
    """A standalone SVG 1.1 document; identical inputs give identical bytes."""
    cfg = cfg or GeometryConfig()
    r = cfg.r
    margin = cfg.margin if cfg.margin is not None else 1.5 * r
    stroke_width = cfg.stroke_width if cfg.stroke_width is not None else 0.15 * r
    xs = [a.center[0] for a in curve.arcs]
    ys = [a.center[1] for a in curve.arcs]
    x0, x1 = min(xs) - r - margin, max(xs) + r + margin
    y0, y1 = min(ys) - r - margin, max(ys) + r + margin
    width, height = x1 - x0, y1 - y0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(width)} {_fmt(height)}">',
    ]
    d = cfg.spacing
    if show_packing:
        lines.append('<g id="packing" fill="none" stroke="#999999" '
                     f'stroke-width="{_fmt(stroke_width / 3)}">')
        gx0, gx1 = math.floor(x0 / d) - 1, math.ceil(x1 / d) + 1
        gy0, gy1 = math.floor(y0 / d) - 1, math.ceil(y1 / d) + 1
        inside = {(v.x, v.y) for v in graph.vertices} if graph is not None else set()
        for i in range(gx0, gx1 + 1):
            for j in range(gy0, gy1 + 1):
                for cx, cy, black in ((i * d, j * d, True), ((i + 0.5) * d, (j + 0.5) * d, False)):
                    if x0 - r <= cx <= x1 + r and y0 - r <= cy <= y1 + r:
                        fill = ' fill="#bbbbbb"' if black and (i, j) in inside else ""
                        lines.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(-cy)}" r="{_fmt(r)}"{fill}/>')
        lines.append("</g>")
    lines.append(f'<path id="tangle" d="{svg_path_data(curve)}" fill="none" '
                 f'stroke="{cfg.stroke}" stroke-width="{_fmt(stroke_width)}" stroke-linejoin="round"/>')
    if show_dual and graph is not None:
        lines.append(f'<g id="dual" stroke="#cc0000" fill="#cc0000" stroke-width="{_fmt(stroke_width / 2)}">')
        for e in sorted(graph.edges):
            (p, q) = e.endpoints
            lines.append(f'<line x1="{_fmt(p.x * d)}" y1="{_fmt(-p.y * d)}" '
                         f'x2="{_fmt(q.x * d)}" y2="{_fmt(-q.y * d)}"/>')
        for v in sorted(graph.vertices):
            lines.append(f'<circle cx="{_fmt(v.x * d)}" cy="{_fmt(-v.y * d)}" r="{_fmt(r / 4)}"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
