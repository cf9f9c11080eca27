import pytest
from hypothesis import given, settings

from copsrobber.arena import play
from copsrobber.corpus import connected_atlas, interval_corpus
from copsrobber.decomposition import treewidth_exact
from copsrobber.errors import ConfigurationError, InputError
from copsrobber.game import cop_number_exact, solve_fixed_k, successor_multisets
from copsrobber.generators import (ProductSpec, cartesian_product, chordal_accessible, hypercube,
                                   strong_product_path_clique, theta_family, theta_star_decomposition)
from copsrobber.graph import complete_graph, cycle_graph, minimum_dominating_set, path_graph, sun3
from copsrobber.interval import compute_w
from copsrobber.strategies import (AccessibleEvader, DominationCops, FarthestRobber, GreedyCops,
                                   IntervalThreeTeamCops, OptimalCops, OptimalRobber, ProductLiftCops, RandomCops,
                                   RandomRobber, SweepCops, ThetaEvader, WideEvader, assign_moves)
from copsrobber.wide import max_wide_subgraph
from oracles import graphs

ATLAS_SAMPLE = connected_atlas(6)[::5]


def robbers():
    return [OptimalRobber(), FarthestRobber(), RandomRobber(1)]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6, connected=True))
def test_assign_moves_is_legal(g):
    cops = tuple(range(min(2, g.n)))
    for target in successor_multisets(g, tuple(sorted(cops))):
        ordered = assign_moves(g, cops, target)
        assert sorted(ordered) == sorted(target)
        assert all(c == t or g.has_edge(c, t) for c, t in zip(cops, ordered))


def test_optimal_cops_capture_within_the_solved_value():
    for g in ATLAS_SAMPLE:
        c = cop_number_exact(g).cop_number
        bound = solve_fixed_k(g, c).capture_rounds
        for robber in robbers():
            tr = play(g, c, OptimalCops(), robber)
            assert tr.captured and tr.outcome.round <= bound


def test_optimal_robber_survives_too_few_cops():
    for g in ATLAS_SAMPLE:
        c = cop_number_exact(g).cop_number
        if c < 2:
            continue
        for cops in (OptimalCops(), GreedyCops(), RandomCops(4)):
            assert not play(g, c - 1, cops, OptimalRobber(), max_rounds=60).captured


def test_domination_policy():
    for g in ATLAS_SAMPLE:
        k = len(minimum_dominating_set(g))
        for robber in robbers():
            tr = play(g, k, DominationCops(), robber)
            assert tr.captured and tr.outcome.round <= 1
    with pytest.raises(ConfigurationError):
        play(cycle_graph(6), 1, DominationCops(), FarthestRobber())


@pytest.mark.parametrize("g", [path_graph(5), cycle_graph(7), sun3(), hypercube(3), complete_graph(4)]
                         + list(connected_atlas(6)[::40]))
def test_sweep_captures_with_width_plus_one(g):
    tw, td = treewidth_exact(g)
    for robber in robbers():
        tr = play(g, tw + 1, SweepCops(td), robber)
        assert tr.captured


def test_sweep_on_theta_with_star_decomposition():
    g = theta_family(3)
    td = theta_star_decomposition(3)
    tr = play(g, td.width + 1, SweepCops(td), OptimalRobber())
    assert tr.captured


def test_sweep_needs_enough_cops():
    with pytest.raises(ConfigurationError):
        play(path_graph(5), 1, SweepCops(), OptimalRobber())


def test_three_teams_capture_on_interval_graphs():
    corpus = [item for item in interval_corpus(9) if item[1].n <= 12]
    for name, g, rep in corpus[::4]:
        w, _ = compute_w(g, rep)
        for robber in (FarthestRobber(), RandomRobber(2)):
            assert play(g, 3 * w, IntervalThreeTeamCops(rep), robber).captured, name
    g, rep = strong_product_path_clique(2)
    assert play(g, 6, IntervalThreeTeamCops(rep), OptimalRobber()).captured


def test_product_lift_captures():
    for factors in ([complete_graph(2)] * 2, [complete_graph(3)] * 2, [complete_graph(2)] * 3,
                    [path_graph(3), complete_graph(2)]):
        spec = ProductSpec(tuple(factors))
        g = cartesian_product(spec)
        c1 = cop_number_exact(factors[0]).cop_number
        k = g.n * c1 // factors[0].n
        for factor_policy in (DominationCops(), OptimalCops()):
            tr = play(g, k, ProductLiftCops(factor_policy, spec), OptimalRobber())
            assert tr.captured


def test_wide_evader_survives():
    for g in [cycle_graph(6), sun3(), hypercube(3), strong_product_path_clique(2)[0]] + list(ATLAS_SAMPLE):
        k, h = max_wide_subgraph(g)
        if k < 2:
            continue
        for cops in (OptimalCops(), GreedyCops(), RandomCops(3)):
            assert not play(g, k - 1, cops, WideEvader(h, k), max_rounds=100).captured


def test_wide_evader_preconditions():
    with pytest.raises(ConfigurationError):
        play(cycle_graph(6), 2, GreedyCops(), WideEvader(range(6), 2))
    with pytest.raises(ConfigurationError):
        play(path_graph(4), 1, GreedyCops(), WideEvader(range(4), 2))


def test_theta_evader():
    g = theta_family(3)
    for cops in (OptimalCops(), GreedyCops(), RandomCops(5)):
        assert not play(g, 2, cops, ThetaEvader(3), max_rounds=200).captured
    with pytest.raises(ConfigurationError):
        play(g, 3, GreedyCops(), ThetaEvader(3))
    with pytest.raises(InputError):
        play(cycle_graph(5), 1, GreedyCops(), ThetaEvader(3))


def test_accessible_evader():
    p2 = chordal_accessible(2)
    for cops in (OptimalCops(), GreedyCops()):
        assert not play(p2.graph, 1, cops, AccessibleEvader(p2), max_rounds=200).captured
    p4 = chordal_accessible(4)
    for cops in (OptimalCops(), GreedyCops(), RandomCops(9)):
        assert not play(p4.graph, 3, cops, AccessibleEvader(p4), max_rounds=300).captured
    with pytest.raises(ConfigurationError):
        play(p4.graph, 4, GreedyCops(), AccessibleEvader(p4))


def test_sweep_beats_the_optimal_robber_on_the_whole_corpus():
    from copsrobber.verify import sandwich_corpus
    for name, g in sandwich_corpus():
        tw, td = treewidth_exact(g)
        assert play(g, tw + 1, SweepCops(td), OptimalRobber()).captured, name
