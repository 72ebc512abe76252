from collections import Counter

import pytest

from tangles.dualgraph import DualGraph, class_of, is_valid
from tangles.enumerator import (CIRCLE, brute_force_oracle, class_counts_from_table, count_tables,
                                enumerate_by_class, enumerate_fixed, iter_fixed)
from tangles.grid import D4, ROT90, apply_symmetry, canonical_form, canonical_under, stabilizer

# Size-0..10 diagonal of the fixed table: tree dual graphs (bond trees).
BOND_TREES = [1, 2, 6, 22, 87, 364, 1574, 6986, 31581, 144880, 672390]


def test_sizes_one_to_three():
    graphs = enumerate_fixed(3)
    assert Counter(g.m for g in graphs) == {1: 2, 2: 6, 3: 22}
    assert len(enumerate_fixed(1)) == 2


def test_size_four_split_by_class():
    at4 = Counter(class_of(g) for g in enumerate_fixed(4) if g.m == 4)
    assert at4 == {3: 1, 5: 87}


def test_circle_is_reported_separately():
    assert all(g.m >= 1 for g in enumerate_fixed(2))
    assert CIRCLE.m == 0 and class_of(CIRCLE) == 1


def test_fixed_output_unique_valid_and_ordered(graphs_to_8):
    forms = [canonical_form(g) for g in graphs_to_8]
    assert len(set(forms)) == len(forms)
    assert all(canonical_form(g) == tuple(sorted(g.edges)) for g in graphs_to_8)
    keys = [(g.m, sorted(g.edges)) for g in graphs_to_8]
    assert keys == sorted(keys)
    assert all(is_valid(g) for g in graphs_to_8)


def test_visitor_sees_every_graph():
    seen = []
    graphs = enumerate_fixed(4, visitor=seen.append)
    assert seen == graphs


def test_iteration_is_deterministic():
    assert list(iter_fixed(5)) == list(iter_fixed(5))


def test_count_tables_small_rows():
    t = count_tables(4)
    assert t.rows() == [(0, 1, 1, 1, 1), (1, 2, 2, 1, 1), (2, 3, 6, 2, 2), (3, 4, 22, 7, 5),
                        (4, 3, 1, 1, 1), (4, 5, 87, 24, 15)]
    assert count_tables(0).rows() == [(0, 1, 1, 1, 1)]


def test_count_table_support_and_ordering(table_10):
    for (m, c), n in table_10.fixed.items():
        assert n > 0
        assert c - 1 <= m <= (c * c - 1) // 2 and m % 2 == (c - 1) % 2
        one, free = table_10.one_sided[m, c], table_10.free[m, c]
        assert n >= one >= free and 8 * free >= n


def test_tree_diagonal(table_10):
    for m, n in enumerate(BOND_TREES):
        assert table_10.fixed[m, m + 1] == n


def test_storing_mode_agrees_with_counting_mode(graphs_to_8):
    t = count_tables(8)
    fixed = Counter((g.m, class_of(g)) for g in graphs_to_8)
    one = Counter((g.m, class_of(g)) for g in {canonical_under(g, "rotations"): g for g in graphs_to_8}.values())
    free = Counter((g.m, class_of(g)) for g in {canonical_under(g, "full"): g for g in graphs_to_8}.values())
    for (m, c) in fixed:
        assert (t.fixed[m, c], t.one_sided[m, c], t.free[m, c]) == (fixed[m, c], one[m, c], free[m, c])


def test_rotating_the_domain_preserves_fixed_counts(graphs_to_7):
    forms = {canonical_form(g) for g in graphs_to_7}
    for s in D4:
        assert {canonical_form(apply_symmetry(g, s)) for g in graphs_to_7} == forms


def test_orbit_sizes_sum_to_fixed_counts(graphs_to_7):
    t = count_tables(7)
    reps = {}
    for g in graphs_to_7:
        reps.setdefault(canonical_under(g, "full"), g)
    total = Counter()
    for g in reps.values():
        total[g.m, class_of(g)] += 8 // len(stabilizer(g))
    for key, n in total.items():
        assert t.fixed[key] == n
    assert len(reps) == sum(n for (m, _), n in t.free.items() if 1 <= m <= 7)


def test_brute_force_oracle_matches_search():
    assert brute_force_oracle(6).rows() == count_tables(6).rows()
    assert [r[2] for r in brute_force_oracle(2).rows()] == [1, 2, 6]
    assert brute_force_oracle(0).rows() == [(0, 1, 1, 1, 1)]
    at4 = {r[1]: r[2] for r in brute_force_oracle(4).rows() if r[0] == 4}
    assert at4 == {3: 1, 5: 87}


def test_brute_force_bound():
    with pytest.raises(ValueError):
        brute_force_oracle(7)


def test_parallel_split_matches_serial():
    assert count_tables(7, workers=3).rows() == count_tables(7, workers=1).rows()


@pytest.mark.parametrize("c, fixed, one_sided, free", [(1, 1, 1, 1), (2, 2, 1, 1), (3, 7, 3, 3), (4, 32, 10, 7)])
def test_by_class_small(c, fixed, one_sided, free):
    cc = enumerate_by_class(c)
    assert (cc.fixed, cc.one_sided, cc.free) == (fixed, one_sided, free)
    assert cc.complete and cc.m_bound == (c * c - 1) // 2


def test_by_class_three_by_size():
    assert enumerate_by_class(3).by_size == {2: (6, 2, 2), 4: (1, 1, 1)}


def test_by_class_five_includes_the_block():
    cc = enumerate_by_class(5)
    assert (cc.fixed, cc.free) == (168, 31)
    assert cc.by_size[12] == (1, 1, 1)


def test_by_class_agrees_with_table(table_10):
    for cc in class_counts_from_table(table_10):
        direct = enumerate_by_class(cc.c)
        assert (cc.fixed, cc.one_sided, cc.free) == (direct.fixed, direct.one_sided, direct.free)
