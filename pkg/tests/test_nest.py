import itertools

import pytest
from hypothesis import given, settings

import exception
import instances
import models
import nest
import strategies


def _rep(*quads):
    return models.NestRep.from_quads(quads)


def _check_memo(table):
    # Every stored entry rebuilds into a strong independent subset of its
    # window of the stored size
    for (u, v, x), (size, _choice) in list(table.memo.items()):
        members = table.members(u, v, x)
        assert len(members) == size
        assert set(members) <= set(table.window(u, v, x))
        assert nest.is_strong_independent(table.rep, members)


def test_normalize_single_point_nest():
    norm = nest.normalize_nest(_rep((0, 0, 0, 0)))
    assert norm.quad(0) == (1, 2, 3, 4)


def test_normalize_keeps_touching_arc():
    # r_u == L_v, so S_v meets T_u
    rep = _rep((0, 1, 5, 6), (5, 7, 8, 9))
    assert rep.has_arc(1, 0)
    norm = nest.normalize_nest(rep)
    assert norm.has_arc(1, 0)
    assert nest.arcs(norm) == nest.arcs(rep)


@settings(max_examples=200)
@given(rep=strategies.nest_reps())
def test_normalize_keeps_arcs(rep):
    norm = nest.normalize_nest(rep)
    coords = sorted(norm.L + norm.l + norm.r + norm.R)
    assert coords == list(range(1, 4 * rep.n + 1))
    assert nest.arcs(norm) == nest.arcs(rep)


def test_add_dummies_without_vertices():
    ext = nest.add_dummies(_rep())
    assert ext.n == 2
    table = nest.SisTable(ext)
    assert table.eta(0) == 1
    assert table.window(0, 1, table.eta(0)) == []


def test_add_dummies_bounds():
    norm = nest.normalize_nest(instances.gen_nest(6, 3, 40))
    ext = nest.add_dummies(norm)
    a, b = 6, 7
    for y in range(6):
        assert ext.r[a] < ext.L[y]
        assert ext.R[y] < ext.l[b]
        assert nest.in_X(ext, a, b, y)


def test_eta_single_vertex():
    ext = nest.add_dummies(nest.normalize_nest(_rep((0, 1, 2, 3))))
    v, a, b = 0, 1, 2
    assert nest.eta(ext, a) == v
    assert nest.eta(ext, v) == b
    assert nest.eta(ext, b) is None
    table = nest.SisTable(ext)
    assert table.eta(a) == v
    assert table.eta(b) is None


def test_in_x_and_in_y_guards():
    ext = nest.add_dummies(nest.normalize_nest(
        _rep((0, 1, 2, 3), (10, 11, 12, 13))))
    # r_u >= l_v leaves nothing between them
    assert not nest.in_X(ext, 1, 0, 0)
    # y below the l floor set by x
    assert not nest.in_Y(ext, 2, 3, 1, 0)
    assert nest.in_Y(ext, 2, 3, 0, 1)


def test_compute_s_single_vertex():
    table, a, b = nest.build_table(_rep((0, 1, 2, 3)))
    assert nest.compute_s(table, a, b, table.eta(a)) == [0]
    _check_memo(table)


def test_mutual_pair_gives_one_vertex():
    rep = _rep((0, 1, 2, 3), (0, 1, 2, 3))
    assert rep.has_arc(0, 1) and rep.has_arc(1, 0)
    assert len(nest.max_sis(rep)) == 1


def test_separated_nests_are_all_taken():
    rep = _rep((0, 1, 2, 3), (10, 11, 12, 13), (20, 21, 22, 23))
    assert nest.arcs(rep) == []
    assert nest.max_sis(rep) == [0, 1, 2]


def test_empty_digraph():
    assert nest.max_sis(_rep()) == []


def test_is_strong_independent():
    one_way = _rep((0, 1, 2, 3), (2, 10, 11, 12))
    assert nest.is_strong_independent(one_way, [])
    assert nest.is_strong_independent(one_way, [1])
    assert one_way.has_arc(1, 0) and not one_way.has_arc(0, 1)
    assert nest.is_strong_independent(one_way, [0, 1])
    mutual = _rep((0, 1, 2, 3), (0, 1, 2, 3))
    assert not nest.is_strong_independent(mutual, [0, 1])


def test_invalid_nest_rejected():
    with pytest.raises(exception.InvalidNestRepresentation):
        _rep((0, 3, 2, 4))
    with pytest.raises(exception.InvalidNestRepresentation):
        _rep((2, 1, 3, 4))


def test_bruteforce_bound():
    rep = instances.gen_nest(21, 0, 100)
    with pytest.raises(exception.BoundExceeded):
        nest.max_sis_bruteforce(rep)


@pytest.mark.parametrize('seed', range(60))
def test_max_sis_matches_bruteforce(seed):
    rep = instances.gen_nest(8, seed, 60)
    table, a, b = nest.build_table(rep)
    found = table.members(a, b, table.eta(a))
    assert found == nest.max_sis(rep)
    assert nest.is_strong_independent(rep, found)
    assert len(found) == len(nest.max_sis_bruteforce(rep))
    _check_memo(table)


@settings(max_examples=200)
@given(rep=strategies.nest_reps())
def test_max_sis_is_maximum(rep):
    found = nest.max_sis(rep)
    assert found == sorted(set(found))
    assert nest.is_strong_independent(rep, found)
    assert len(found) == len(nest.max_sis_bruteforce(rep))


@settings(max_examples=50)
@given(rep=strategies.nest_reps(max_n=6))
def test_memo_entries_are_strong_independent(rep):
    table, a, b = nest.build_table(rep)
    table.compute(a, b, table.eta(a))
    _check_memo(table)


def test_max_sis_is_deterministic():
    rep = instances.gen_nest(12, 7, 80)
    assert nest.max_sis(rep) == nest.max_sis(rep)


def _best_within(rep, vertices):
    for k in range(len(vertices), 0, -1):
        for subset in itertools.combinations(vertices, k):
            if nest.is_strong_independent(rep, subset):
                return k
    return 0


def _check_memo_is_maximum(table):
    for (u, v, x), (size, _choice) in list(table.memo.items()):
        assert size == _best_within(table.rep, table.window(u, v, x)), (
            u, v, x)


def test_window_from_eta_is_whole_gap():
    # eta(u) may start inside S_u; Y(u, v, eta(u)) is still all of X(u, v)
    ext = nest.add_dummies(nest.normalize_nest(instances.gen_nest(7, 16, 60)))
    table = nest.SisTable(ext)
    for u in range(ext.n):
        for v in range(ext.n):
            gap = [y for y in table.by_l if nest.in_X(ext, u, v, y)]
            x = table.eta(u)
            assert table.window(u, v, x) == gap, (u, v)
            if x is not None:
                assert [y for y in table.by_l
                        if nest.in_Y(ext, u, v, x, y)] == gap


def test_one_way_arc_pair_with_shared_rival():
    # 1 -> 0 only; 2 is mutual with both, so {0, 1} is the unique maximum
    rep = _rep((6, 8, 9, 12), (1, 3, 5, 10), (2, 4, 7, 11))
    assert rep.has_arc(1, 0) and not rep.has_arc(0, 1)
    assert rep.has_arc(0, 2) and rep.has_arc(2, 0)
    assert rep.has_arc(1, 2) and rep.has_arc(2, 1)
    assert nest.max_sis(rep) == [0, 1]
    assert nest.max_sis_bruteforce(rep) == [0, 1]


@pytest.mark.parametrize('seed', range(0, 60, 3))
def test_memo_sizes_are_window_maxima(seed):
    table, a, b = nest.build_table(instances.gen_nest(7, seed, 50))
    table.compute(a, b, table.eta(a))
    _check_memo_is_maximum(table)


@settings(max_examples=50)
@given(rep=strategies.nest_reps(max_n=6))
def test_memo_sizes_are_window_maxima_on_small_nests(rep):
    table, a, b = nest.build_table(rep)
    table.compute(a, b, table.eta(a))
    _check_memo_is_maximum(table)
