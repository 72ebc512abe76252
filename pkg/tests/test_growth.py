from collections import defaultdict

import pytest

from conftest import DUMBBELL, UNIT_SQUARE
from tangles.dualgraph import DualGraph, class_of, is_valid
from tangles.enumerator import ClassCount, CountTable, class_counts_from_table, count_tables
from tangles.grid import canonical_form
from tangles.growth import (KAPPA_P, MU_P, check_sandwich, check_superadditivity, concat_area,
                            concat_length, growth_estimates)

CIRCLE = DualGraph.circle()


def test_concat_area_examples():
    c = concat_area(CIRCLE, CIRCLE)
    assert c.m == 0 and is_valid(c)
    two = concat_area(DUMBBELL, DUMBBELL)
    assert two.m == 2 and is_valid(two)
    g = concat_area(UNIT_SQUARE, DUMBBELL)
    assert (g.m, g.k, class_of(g)) == (5, 1, 4) and is_valid(g)


def test_concat_length_examples():
    g = concat_length(CIRCLE, CIRCLE)
    assert g.m == 1 and class_of(g) == 2
    g = concat_length(DUMBBELL, CIRCLE)
    assert g.m == 2 and class_of(g) == 3
    g = concat_length(UNIT_SQUARE, UNIT_SQUARE)
    assert (g.m, g.k, class_of(g)) == (9, 2, 6) and is_valid(g)


def test_concat_area_exhaustive(graphs_to_6):
    pool = [CIRCLE] + graphs_to_6
    images = defaultdict(set)
    n_pairs = defaultdict(int)
    for g1 in pool:
        for g2 in pool:
            if g1.m + g2.m > 6:
                continue
            g = concat_area(g1, g2)
            assert is_valid(g)
            assert g.m == g1.m + g2.m and g.k == g1.k + g2.k
            images[g1.m, g2.m].add(canonical_form(g) or ())
            n_pairs[g1.m, g2.m] += 1
    for key, n in n_pairs.items():
        if key != (0, 0):
            assert len(images[key]) == n


def test_concat_length_exhaustive(graphs_to_6):
    pool = [CIRCLE] + [g for g in graphs_to_6 if g.m <= 5]
    images = defaultdict(set)
    n_pairs = defaultdict(int)
    for g1 in pool:
        for g2 in pool:
            if g1.m + g2.m > 5:
                continue
            g = concat_length(g1, g2)
            assert is_valid(g)
            c1, c2 = class_of(g1), class_of(g2)
            assert class_of(g) == c1 + c2 and g.m == g1.m + g2.m + 1
            images[c1, c2, g1.m, g2.m].add(canonical_form(g))
            n_pairs[c1, c2, g1.m, g2.m] += 1
    for key, n in n_pairs.items():
        assert len(images[key]) == n


def test_superadditivity_examples():
    t = count_tables(4)
    area, length = check_superadditivity(t, class_counts_from_table(t))
    rows = {(m1, m2): (lhs, rhs) for m1, m2, lhs, rhs in area.checked}
    assert rows[1, 1] == (4, 6)
    assert rows[2, 2] == (36, 88)
    assert area.ok and length.ok


def test_length_superadditivity_example():
    classes = [ClassCount(c, n, n, n, True, (c * c - 1) // 2) for c, n in ((1, 1), (2, 2), (3, 7), (4, 32))]
    _, length = check_superadditivity(CountTable(0), classes)
    assert (2, 2, 4, 32) in length.checked and length.ok


def test_violation_detected():
    # a_0(1)^2 = 9 > a_0(2) = 5, and at m = 2 free exceeds one-sided
    t = CountTable(2, fixed={(0, 1): 1, (1, 2): 3, (2, 3): 5}, one_sided={(0, 1): 1, (1, 2): 1, (2, 3): 1},
                   free={(0, 1): 1, (1, 2): 1, (2, 3): 2})
    area, _ = check_superadditivity(t, [])
    assert area.violations == [(1, 1, 9, 5)]
    sand, _ = check_sandwich(t)
    assert sand.violations == [(2, 5, 1, 2)]


def test_sandwich_examples(table_10):
    area, length = check_sandwich(table_10, class_counts_from_table(table_10))
    assert area.ok and length.ok
    rows = {m: rest for m, *rest in area.checked}
    assert rows[0] == [1, 1, 1]
    assert rows[4] == [88, 25, 16]
    fixed, one, free = rows[10]
    assert fixed == 723740 and free == 84320 + 6299 + 170 + 2 == 90791
    assert fixed / 8 == 90467.5 <= free <= one <= fixed


def test_growth_estimates(table_10):
    rep = growth_estimates(table_10, class_counts_from_table(table_10))
    assert rep.area_roots["fixed"][1] == 2.0
    assert rep.area_roots["fixed"][10] == pytest.approx(3.855, abs=1e-3)
    assert rep.length_roots["fixed"][3] == pytest.approx(1.913, abs=1e-3)
    assert all(0 < v < float("inf") for kind in rep.area_roots.values() for v in kind.values())
    assert rep.kappa_band == (KAPPA_P, KAPPA_P ** 2) and rep.mu_band == (MU_P, MU_P ** 2)
    assert rep.ok
    assert "limit only" in rep.format()
