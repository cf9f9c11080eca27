import networkx as nx
import pytest
from hypothesis import given, settings

from copsrobber.corpus import connected_atlas
from copsrobber.errors import CapabilityError, InputError
from copsrobber.game import (INF, GameState, Turn, cop_moves, cop_number_exact, robber_moves, solve_fixed_k,
                             solve_restricted, state_estimate, successor_multisets)
from copsrobber.generators import hypercube, theta_family
from copsrobber.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph, sun3
from oracles import brute_force_cop_number, brute_force_cop_win, from_nx, graphs


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7, connected=True))
def test_verdicts_match_naive_attractor(g):
    for k in (1, 2):
        assert solve_fixed_k(g, k).cops_win == brute_force_cop_win(g, k)


def test_cop_numbers_on_sample_of_atlas():
    for g in connected_atlas(6)[::7]:
        assert cop_number_exact(g).cop_number == brute_force_cop_number(g)


@pytest.mark.parametrize("g, c", [
    (complete_graph(4), 1), (path_graph(6), 1), (star_graph(5), 1), (cycle_graph(4), 2),
    (cycle_graph(7), 2), (sun3(), 2), (hypercube(3), 2), (Graph(1), 1),
])
def test_known_cop_numbers(g, c):
    res = cop_number_exact(g)
    assert res.cop_number == c
    assert res.verdicts[c] == "cops"
    assert all(v == "robber" for k, v in res.verdicts.items() if k < c)


def test_trees_need_one_cop():
    for n in range(2, 9):
        for t in nx.nonisomorphic_trees(n):
            assert cop_number_exact(from_nx(t)).cop_number == 1


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=6, connected=True))
def test_more_cops_never_hurt(g):
    wins = [solve_fixed_k(g, k).cops_win for k in range(1, 4)]
    assert wins == sorted(wins)


def test_successors_and_moves():
    g = path_graph(3)
    assert successor_multisets(g, (0,)) == [(0,), (1,)]
    assert successor_multisets(g, (1, 1)) == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    assert cop_moves(g, GameState((0,), 2, Turn.COPS)) == [(0,), (1,)]
    assert robber_moves(g, GameState((1,), 2, Turn.ROBBER)) == [2]
    with pytest.raises(InputError):
        robber_moves(g, GameState((1,), 1, Turn.ROBBER))
    with pytest.raises(InputError):
        cop_moves(g, GameState((1,), 2, Turn.ROBBER))


def test_budget_refusal():
    g = theta_family(4)
    with pytest.raises(CapabilityError):
        solve_fixed_k(g, 3, budget=10**4)
    with pytest.raises(CapabilityError) as info:
        cop_number_exact(g, budget=10**4)
    assert info.value.bracket[0] >= 1
    assert state_estimate(52, 3) > 10**4


def test_capture_rounds_and_values():
    sol = solve_fixed_k(path_graph(5), 1)
    assert sol.cops_win and sol.capture_rounds is not None
    c = sol.cop_placement()
    r = sol.robber_placement(c)
    assert sol.value(c, r) <= sol.capture_rounds
    lost = solve_fixed_k(cycle_graph(5), 1)
    assert not lost.cops_win and lost.capture_rounds is None
    assert lost.value((0,), 2) == INF


def test_dominating_placement_captures_in_one_round():
    sol = solve_fixed_k(star_graph(4), 1)
    assert sol.cop_placement() == (0,)
    assert sol.capture_rounds == 1


def test_strategy_tables_are_consistent():
    g = cycle_graph(5)
    win = solve_fixed_k(g, 2)
    for state, target in win.cop_strategy.items():
        assert target in successor_multisets(g, state.cops)
        assert state.robber in target or win.good[win._idx(target), state.robber] < INF
    lose = solve_fixed_k(g, 1)
    for state, dest in lose.robber_strategy.items():
        assert dest in robber_moves(g, state)
        assert lose.value(state.cops, dest) == INF


def test_optimal_play_decreases_value():
    g = path_graph(6)
    sol = solve_fixed_k(g, 1)
    cops = sol.cop_placement()
    robber = sol.robber_placement(cops)
    for _ in range(10):
        before = sol.value(cops, robber)
        cops = sol.cop_move(cops, robber)
        if robber in cops:
            break
        robber = sol.robber_move(cops, robber)
        assert sol.value(cops, robber) < before
    assert robber in cops


def test_restricted_game_on_small_pair():
    # the robber keeps away from X = {0} and v = 2 on the path 2-0-1-3: one cop wins easily
    g = Graph(4, [(2, 0), (0, 1), (1, 3)])
    assert solve_restricted(g, 1, avoid={0, 2}, access={0}).cops_win
    # on a 5-cycle with X = N(v) the lone cop cannot both guard and chase
    c5 = cycle_graph(5)
    assert not solve_restricted(c5, 1, avoid=set(), access=None).cops_win


def test_bad_inputs():
    with pytest.raises(InputError):
        solve_fixed_k(path_graph(3), -1)
    sol = solve_fixed_k(path_graph(3), 1)
    with pytest.raises(InputError):
        sol.value((0, 1), 2)


def test_empty_graph():
    assert cop_number_exact(Graph(0)).cop_number == 0
