import json

import pytest

from lightsout.graph import complete_bipartite, cycle, path
from lightsout.group import replay, win_sequence_bfs, winnable_set
from lightsout.labeling import Labeling, all_labelings
from lightsout.nbd import replay_nbd
from lightsout.strategies import (
    StrategyError,
    StrategyResult,
    bfs_z2_solver,
    clear_tail_cycle,
    clear_tail_path,
    family_z2_solver,
    lift_strategy_2k,
    standard_form_bipartite,
    win_bipartite_z2,
    win_cycle_z2,
    win_path_z2,
)


def L(m, *vals):
    return Labeling(m, vals)


def assert_result(g, s, res: StrategyResult):
    assert res.final == replay(g, s, res.sequence)
    assert res.certified == res.final.is_zero()
    assert res.certified, (s, res)


# --- bipartite standard form ------------------------------------------------

def _standard(lab: Labeling, n: int) -> bool:
    first, second = lab.values[:n], lab.values[n:]
    return not any(first) and len(set(second)) == 1


def test_standard_form_group_example():
    s = L(2, 0, 0, 1, 1)
    seq = standard_form_bipartite("group", 2, 2, 2, s)
    after = replay(complete_bipartite(2, 2), s, seq)
    assert _standard(after, 2)
    # second part is emptied before the first
    assert seq[:2] == [3, 4]


def test_standard_form_nbd_example():
    s = L(3, 1, 2, 0, 1)
    seq = standard_form_bipartite("nbd", 2, 2, 3, s)
    after = replay_nbd(complete_bipartite(2, 2), s, seq)
    assert after.values[:2] == (0, 0)
    assert after.values[2] == after.values[3]


@pytest.mark.parametrize("game, m", [("nbd", 2), ("nbd", 3), ("nbd", 6), ("group", 2), ("group", 4), ("group", 8)])
def test_standard_form_all_states(game, m):
    n, p = 2, 2
    k = m.bit_length() - 1
    g = complete_bipartite(n, p)
    play = replay_nbd if game == "nbd" else replay
    for s in all_labelings(n + p, m):
        seq = standard_form_bipartite(game, n, p, m, s)
        assert _standard(play(g, s, seq), n)
        per_vertex = max((seq.count(v) for v in g.vertices), default=0)
        # at most m-1 toggles per vertex (nbd), at most k doublings (group)
        assert per_vertex <= (m - 1 if game == "nbd" else k)


def test_standard_form_already_standard():
    s = L(4, 0, 0, 0, 0)
    assert standard_form_bipartite("group", 2, 2, 4, s) == []


def test_standard_form_rejects_odd_group_modulus():
    with pytest.raises(StrategyError):
        standard_form_bipartite("group", 2, 2, 6, L(6, 0, 0, 1, 1))


# --- clearing the tail ------------------------------------------------------

def test_clear_tail_path_examples():
    s = L(2, 0, 0, 0, 1)
    seq = clear_tail_path(s)
    assert seq[0] == 4
    assert replay(path(4), s, seq).values[1:] == (0, 0, 0)

    s = L(2, 0, 0, 1, 0)
    seq = clear_tail_path(s)
    assert seq[:3] == [3, 2, 3]
    assert replay(path(4), s, seq).values[1:] == (0, 0, 0)

    assert clear_tail_path(L(2, 1, 0, 0, 0, 0)) == []


@pytest.mark.parametrize("n", range(1, 10))
def test_clear_tail_path_all_states(n):
    g = path(n)
    for s in all_labelings(n, 2):
        seq = clear_tail_path(s)
        assert len(seq) <= 3 * n
        assert not any(replay(g, s, seq).values[1:])


@pytest.mark.parametrize("n", range(3, 10))
def test_clear_tail_cycle_all_states(n):
    g = cycle(n)
    for s in all_labelings(n, 2):
        seq = clear_tail_cycle(s)
        assert len(seq) <= 3 * n
        assert not any(replay(g, s, seq).values[2:])


@pytest.mark.parametrize("n", [1, 3, 4, 6, 7, 9])
def test_sweep_leaves_all_ones_but_last(n):
    g = path(n)
    for s in all_labelings(n, 2):
        cleared = replay(g, s, clear_tail_path(s))
        if cleared[1]:
            assert cleared.values == (1,) + (0,) * (n - 1)
            assert replay(g, cleared, range(1, n + 1)).values == (1,) * (n - 1) + (0,)


# --- path / cycle / bipartite Z_2 strategies --------------------------------

def test_win_path_examples():
    res = win_path_z2(L(2, 1, 0, 0))
    assert res.sequence == (1, 2, 3, 1)
    assert res.certified
    res = win_path_z2(L(2, 1))
    assert res.sequence == (1,) and res.certified


@pytest.mark.parametrize("n", [1, 3, 4, 6, 7, 9])
def test_win_path_all_states(n):
    for s in all_labelings(n, 2):
        assert_result(path(n), s, win_path_z2(s))


@pytest.mark.parametrize("n", [2, 5, 8])
def test_win_path_rejects(n):
    with pytest.raises(StrategyError):
        win_path_z2(Labeling.zero(n, 2))


def test_win_cycle_examples():
    res = win_cycle_z2(L(2, 1, 0, 0, 0))
    assert res.certified
    assert win_cycle_z2(L(2, 0, 0, 0, 0)).sequence == ()


@pytest.mark.parametrize("n", [4, 5, 7, 8, 10, 11])
def test_win_cycle_all_states(n):
    for s in all_labelings(n, 2):
        assert_result(cycle(n), s, win_cycle_z2(s))


@pytest.mark.parametrize("n", [3, 6, 9])
def test_win_cycle_rejects(n):
    with pytest.raises(StrategyError):
        win_cycle_z2(Labeling.zero(n, 2))


def test_win_bipartite_examples():
    res = win_bipartite_z2(L(2, 0, 0, 1, 1), 2, 2)
    assert res.sequence == (3, 4) and res.certified
    assert win_bipartite_z2(Labeling.zero(4, 2), 2, 2).sequence == ()


@pytest.mark.parametrize("n, p", [(n, p) for n in range(1, 6) for p in range(1, 7 - n) if n % 2 == 0 or p % 2 == 0])
def test_win_bipartite_all_states(n, p):
    g = complete_bipartite(n, p)
    for s in all_labelings(n + p, 2):
        assert_result(g, s, win_bipartite_z2(s, n, p))


def test_win_bipartite_rejects_odd_parts():
    with pytest.raises(StrategyError):
        win_bipartite_z2(Labeling.zero(4, 2), 1, 3)


# --- lifting ----------------------------------------------------------------

def test_lift_k1_is_base_strategy():
    s = L(2, 1, 0, 1, 1)
    assert lift_strategy_2k(path(4), 1, s, win_path_z2).sequence == win_path_z2(s).sequence


def test_lift_examples():
    for s in all_labelings(3, 4):
        assert_result(path(3), s, lift_strategy_2k(path(3), 2, s, win_path_z2))
    g = complete_bipartite(2, 2)
    s = L(4, 2, 0, 3, 1)
    assert_result(g, s, lift_strategy_2k(g, 2, s, family_z2_solver("kbip", 2, 2)))


@pytest.mark.parametrize("g, solver", [
    (path(4), win_path_z2),
    (cycle(4), win_cycle_z2),
    (complete_bipartite(1, 2), family_z2_solver("kbip", 1, 2)),
])
def test_lift_k3(g, solver):
    for s in all_labelings(g.n, 8):
        assert_result(g, s, lift_strategy_2k(g, 3, s, solver))


def test_lift_with_bfs_oracle_on_arbitrary_graph():
    from lightsout.graph import Graph
    # spider with legs 1, 1, 2 around vertex 5; not a path, cycle or K_{n,p}
    g = Graph(5, frozenset({(1, 5), (2, 5), (3, 4), (4, 5)}))
    assert winnable_set(g, 2).is_full()
    for s in all_labelings(5, 4):
        assert_result(g, s, lift_strategy_2k(g, 2, s, bfs_z2_solver(g)))


def test_lift_fails_on_non_aw_base():
    with pytest.raises(StrategyError):
        lift_strategy_2k(path(2), 2, L(4, 1, 0), bfs_z2_solver(path(2)))


def test_family_solver_rejects_non_aw():
    with pytest.raises(StrategyError):
        family_z2_solver("path", 5)
    with pytest.raises(StrategyError):
        family_z2_solver("cycle", 6)
    with pytest.raises(StrategyError):
        family_z2_solver("kbip", 3, 1)


# --- oracle agreement -------------------------------------------------------

@pytest.mark.parametrize("g, strategy", [
    (path(4), win_path_z2),
    (cycle(5), win_cycle_z2),
    (complete_bipartite(2, 3), lambda s: win_bipartite_z2(s, 2, 3)),
])
def test_strategy_agrees_with_bfs(g, strategy):
    for s in all_labelings(g.n, 2):
        assert strategy(s).certified == (win_sequence_bfs(g, 2, s) is not None)


def test_result_json():
    res = win_path_z2(L(2, 1, 0, 0))
    assert json.loads(res.to_json()) == {"sequence": [1, 2, 3, 1], "final": "0,0,0", "certified": True}
