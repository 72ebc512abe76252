import math

import pytest

from conftest import BLOCK_2X2, DUMBBELL, FIGURE_24, UNIT_SQUARE
from tangles.dualgraph import DualGraph, InvalidDualGraph, class_of
from tangles.geometry import (Arc, GeometryConfig, OpenCurve, TangleCurve, check_smooth_simple,
                              numeric_area, render_svg, trace)
from conftest import CHORDLESS_6_CYCLE

CIRCLE = DualGraph.circle()


def test_circle_curve():
    c = trace(CIRCLE)
    assert len(c) == 4 and c.convex_count == 4
    assert c.length == pytest.approx(2 * math.pi)
    assert numeric_area(c) == pytest.approx(math.pi, abs=1e-9)
    assert check_smooth_simple(c).ok


def test_dumbbell_curve():
    c = trace(DUMBBELL)
    assert (len(c), c.convex_count, c.concave_count) == (8, 6, 2)
    assert numeric_area(c) == pytest.approx(4 + math.pi, abs=1e-9)
    assert check_smooth_simple(c).ok


def test_unit_square_curve():
    c = trace(UNIT_SQUARE)
    assert (len(c), c.convex_count, c.concave_count) == (12, 8, 4)
    assert numeric_area(c) == pytest.approx(16 + math.pi, abs=1e-9)


def test_block_arc_count_matches_class():
    c = trace(BLOCK_2X2)
    assert len(c) == 20 == 4 * class_of(BLOCK_2X2)
    assert numeric_area(c) == pytest.approx(48 + math.pi, abs=1e-9)


def test_radius_two_area():
    g = DualGraph.from_edges([(0, 0, 0), (1, 0, 0), (2, 0, 1), (2, 1, 0), (3, 1, 1)])
    assert numeric_area(trace(g, GeometryConfig(2.0))) == pytest.approx(80 + 4 * math.pi, rel=1e-9)


def test_flipped_arc_breaks_smoothness():
    c = trace(DUMBBELL)
    a = c.arcs[2]
    arcs = list(c.arcs)
    # same endpoints, other side of the chord
    mid = ((a.p0[0] + a.p1[0]) / 2, (a.p0[1] + a.p1[1]) / 2)
    center = (2 * mid[0] - a.center[0], 2 * mid[1] - a.center[1])
    start = round(math.degrees(math.atan2(a.p0[1] - center[1], a.p0[0] - center[0]))) % 360
    arcs[2] = Arc(center, a.r, start, -a.sweep)
    rep = check_smooth_simple(TangleCurve(tuple(arcs)))
    assert rep.closed and not rep.smooth


def test_open_curve_rejected():
    c = trace(DUMBBELL)
    with pytest.raises(OpenCurve):
        numeric_area(TangleCurve(c.arcs[:-1]))


def test_invalid_graph_not_traced():
    with pytest.raises(InvalidDualGraph):
        trace(CHORDLESS_6_CYCLE)


def test_nonpositive_radius():
    with pytest.raises(ValueError):
        GeometryConfig(0)


def test_exhaustive_curves_to_size_6(graphs_to_6):
    for g in [CIRCLE] + graphs_to_6:
        for r in (0.5, 1.0, 2.0):
            c = trace(g, GeometryConfig(r))
            assert len(c) == 4 * class_of(g)
            assert c.convex_count - c.concave_count == 4
            rep = check_smooth_simple(c)
            assert rep.ok, (g, rep.failures)
            assert rep.max_tangent_error < 1e-9
            expected = (4 * g.m + math.pi) * r * r
            assert abs(numeric_area(c) - expected) <= 1e-9 * expected
            for a in c.arcs:
                assert a.start % 90 == 45 and abs(a.sweep) == 90 and a.r == r


def test_area_scales_with_radius_squared(graphs_to_6):
    for g in graphs_to_6[::25]:
        a1 = numeric_area(trace(g, GeometryConfig(1.0)))
        a2 = numeric_area(trace(g, GeometryConfig(2.0)))
        assert abs(a2 / a1 - 4) < 1e-12


def test_self_touching_curve_detected():
    # two circles traversed so that non-consecutive arcs meet at a kissing point
    r = 1.0
    s = math.sqrt(2) * r
    ring1 = [Arc((0.0, 0.0), r, 45 + 90 * i, 90) for i in range(4)]
    ring2 = [Arc((s, s), r, 225 + 90 * i, 90) for i in range(4)]
    rep = check_smooth_simple(TangleCurve(tuple(ring1 + ring2)))
    assert not rep.simple


def test_svg_output():
    svg = render_svg(trace(CIRCLE))
    assert svg.count(" A ") == 4
    g = DUMBBELL
    cfg = GeometryConfig(1.0)
    svg = render_svg(trace(g, cfg), cfg, graph=g, show_dual=True, show_packing=True)
    assert svg.count(" A ") == 8
    assert svg.count("<line ") == 1
    assert svg.startswith("<?xml") and 'version="1.1"' in svg
    assert svg == render_svg(trace(g, cfg), cfg, graph=g, show_dual=True, show_packing=True)
    fig = render_svg(trace(FIGURE_24))
    assert fig.count(" A ") == 24
