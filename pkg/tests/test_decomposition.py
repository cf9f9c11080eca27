import networkx as nx
import pytest
from hypothesis import given, settings

from copsrobber.decomposition import (TreeDecomposition, clique_tree_decomposition, decomposition_from_order,
                                      elimination_width, format_decomposition, is_chordal,
                                      is_perfect_elimination_order, maximum_cardinality_search, minor_min_width,
                                      parse_decomposition, separator_violations, tree_decomposition_violations,
                                      treewidth_exact, validate_tree_decomposition)
from copsrobber.errors import CapabilityError, InputError
from copsrobber.generators import grid, hypercube, theta_family
from copsrobber.graph import Graph, complete_graph, cycle_graph, path_graph, sun3
from oracles import brute_force_treewidth, graphs, has_long_induced_cycle, to_nx


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_treewidth_matches_all_orders(g):
    tw, td = treewidth_exact(g)
    assert tw == brute_force_treewidth(g)
    assert td.width == tw
    assert validate_tree_decomposition(g, td)
    assert minor_min_width(g) <= tw


@pytest.mark.parametrize("g, tw", [
    (complete_graph(6), 5), (path_graph(9), 1), (cycle_graph(9), 2), (grid(4), 4),
    (hypercube(3), 3), (hypercube(4), 6), (theta_family(3), 2), (theta_family(4), 3), (Graph(1), 0),
])
def test_known_treewidths(g, tw):
    assert treewidth_exact(g)[0] == tw


def test_treewidth_limit_refuses_large_kernels():
    with pytest.raises(CapabilityError):
        treewidth_exact(grid(6), limit=10)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_chordality_matches_induced_cycle_search(g):
    ok, peo = is_chordal(g)
    assert ok == (not has_long_induced_cycle(g)) == nx.is_chordal(to_nx(g))
    if ok:
        assert is_perfect_elimination_order(g, peo)
        td = clique_tree_decomposition(g, peo)
        assert validate_tree_decomposition(g, td)
        assert td.width == treewidth_exact(g)[0]


def test_mcs_visits_every_vertex():
    assert sorted(maximum_cardinality_search(sun3())) == list(range(6))


def test_elimination_width_of_path_order():
    g = cycle_graph(5)
    assert elimination_width(g, [0, 1, 2, 3, 4]) == 2
    td = decomposition_from_order(g, [0, 1, 2, 3, 4])
    assert validate_tree_decomposition(g, td) and td.width == 2


def test_violations_are_reported():
    g = path_graph(3)
    missing_edge = TreeDecomposition(Graph(2, [(0, 1)]), [{0, 1}, {2}])
    assert tree_decomposition_violations(g, missing_edge)
    split_vertex = TreeDecomposition(Graph(3, [(0, 1), (1, 2)]), [{0, 1}, {2}, {1, 2}])
    assert tree_decomposition_violations(g, split_vertex)
    not_tree = TreeDecomposition(Graph(2), [{0, 1}, {1, 2}])
    assert not validate_tree_decomposition(g, not_tree)


def test_separators_of_valid_decomposition():
    g = grid(3)
    _, td = treewidth_exact(g)
    assert separator_violations(g, td) == []


def test_split_and_path():
    td = TreeDecomposition(Graph(3, [(0, 1), (1, 2)]), [{0, 1}, {1, 2}, {2, 3}])
    left, right, side = td.split(0, 1)
    assert left == {0, 1} and right == {1, 2, 3} and side == {0}
    assert td.tree_path(0, 2) == [0, 1, 2]


def test_format_roundtrip():
    _, td = treewidth_exact(theta_family(3))
    again = parse_decomposition(format_decomposition(td))
    assert again.tree == td.tree and again.bags == td.bags


def test_parse_rejects_bad_bag():
    with pytest.raises(InputError):
        parse_decomposition("1 0\n0 3 1 2\n")
