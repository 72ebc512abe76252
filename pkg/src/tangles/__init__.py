"""Enumeration and drawing of planar Tangles through their dual graphs."""
from .dualgraph import (
    DisconnectedInput,
    DualGraph,
    InvalidDualGraph,
    area,
    class_of,
    count_squares,
    edge_bounds,
    is_valid,
    max_squares,
)
from .enumerator import (
    CIRCLE,
    ClassCount,
    CountTable,
    brute_force_oracle,
    count_tables,
    enumerate_by_class,
    enumerate_fixed,
)
from .geometry import GeometryConfig, TangleCurve, check_smooth_simple, numeric_area, render_svg, trace
from .grid import EAST, NORTH, D4, ROTATIONS, Edge, Point, apply_symmetry, canonical_form, canonical_under
from .polyomino import CellSet, chan_polyomino, fleron_polyomino

__version__ = "0.1.0"
