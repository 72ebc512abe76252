import pytest

from tangles.dualgraph import DualGraph
from tangles.enumerator import count_tables, enumerate_fixed
from tangles.grid import EAST, NORTH, Edge

E, N = EAST, NORTH

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def graph(*edges) -> DualGraph:
    return DualGraph(frozenset(Edge(*e) for e in edges))


# The 24-Tangle pictured alongside its circle packing (7 edges, one square).
FIGURE_24 = graph((0, 0, E), (0, 0, N), (1, 0, N), (0, 1, E), (1, 1, E), (1, 1, N), (0, 2, E))
DUMBBELL = graph((0, 0, E))
UNIT_SQUARE = graph((0, 0, E), (0, 0, N), (1, 0, N), (0, 1, E))
BLOCK_2X2 = graph(*[(x, y, E) for x in range(2) for y in range(3)],
                  *[(x, y, N) for x in range(3) for y in range(2)])
RECT_WITH_CHORD = graph((0, 0, E), (1, 0, E), (0, 1, E), (1, 1, E), (0, 0, N), (1, 0, N), (2, 0, N))
CHORDLESS_6_CYCLE = graph((0, 0, E), (1, 0, E), (0, 1, E), (1, 1, E), (0, 0, N), (2, 0, N))


@pytest.fixture(scope="session")
def graphs_to_8():
    return enumerate_fixed(8)


@pytest.fixture(scope="session")
def graphs_to_7(graphs_to_8):
    return [g for g in graphs_to_8 if g.m <= 7]


@pytest.fixture(scope="session")
def graphs_to_6(graphs_to_8):
    return [g for g in graphs_to_8 if g.m <= 6]


@pytest.fixture(scope="session")
def table_10():
    return count_tables(10, workers=1)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
