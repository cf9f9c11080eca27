import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from copsrobber.errors import InputError
from copsrobber.graph import (Graph, all_minimum_dominating_sets, closed_neighborhood, component_masks,
                              connected_components, contract_edge, cycle_graph, domination_number_exact,
                              format_graph, from_mask, greedy_dominating_set, is_dominating, is_k_connected,
                              minimum_dominating_set, minimum_separator, parse_graph, path_graph, star_graph,
                              sun3, to_mask, vertex_connectivity)
from oracles import graphs, to_nx


def brute_domination(g):
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            if closed_neighborhood(g, s) == set(range(g.n)):
                return size
    return g.n


def test_edges_are_normalised():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    assert g.degree(1) == 2 and g.has_edge(2, 1)


@pytest.mark.parametrize("n, edges", [(-1, []), (2, [(0, 2)]), (2, [(1, 1)])])
def test_bad_graphs_rejected(n, edges):
    with pytest.raises(InputError):
        Graph(n, edges)


def test_parse_roundtrip_with_comments():
    g = sun3()
    text = format_graph(g, comment="sun\nsecond line")
    assert text.startswith("# sun\n# second line\n")
    assert parse_graph(text) == g


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "2 1\n0 x\n", "3 2\n0 1\n1 0\n", "2 1\n0 1 2\n"])
def test_parse_rejects_malformed(text):
    with pytest.raises(InputError):
        parse_graph(text)


def test_masks_roundtrip():
    assert from_mask(to_mask({0, 3, 5})) == [0, 3, 5]


def test_subgraph_relabels_in_order():
    h, order = cycle_graph(6).subgraph([5, 0, 1])
    assert order == [0, 1, 5]
    assert h.sorted_edges() == [(0, 1), (0, 2)]


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_components_match_networkx(g):
    ours = sorted(sorted(c) for c in connected_components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs
    assert len(component_masks(g)) == len(theirs)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=8, connected=True))
def test_connectivity_matches_networkx(g):
    expected = nx.node_connectivity(to_nx(g))
    assert vertex_connectivity(g) == expected
    assert is_k_connected(g, expected)
    sep = minimum_separator(g)
    if g.is_complete():
        assert sep is None
    else:
        assert len(sep) == expected
        assert len(connected_components(g, sep)) >= 2


def test_separator_of_disconnected_graph_is_empty():
    assert minimum_separator(Graph(3, [(0, 1)])) == frozenset()


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_domination_matches_enumeration(g):
    gamma = brute_domination(g)
    d = minimum_dominating_set(g)
    assert len(d) == gamma == domination_number_exact(g)
    assert is_dominating(g, d)
    greedy = greedy_dominating_set(g)
    assert is_dominating(g, greedy) and len(greedy) >= gamma
    for s in all_minimum_dominating_sets(g):
        assert len(s) == gamma and is_dominating(g, s)


def test_all_minimum_dominating_sets_of_path():
    assert sorted(map(sorted, all_minimum_dominating_sets(path_graph(4)))) == [[0, 2], [0, 3], [1, 2], [1, 3]]


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_contraction_matches_networkx(g):
    if not g.edges:
        return
    e = min(g.edges)
    ours = contract_edge(g, e)
    theirs = nx.contracted_nodes(to_nx(g), e[0], e[1], self_loops=False)
    assert ours.n == g.n - 1
    assert nx.is_isomorphic(to_nx(ours), theirs)


def test_named_graphs():
    assert star_graph(4).max_degree() == 4
    assert sun3().n == 6 and sun3().edge_count == 9
    assert cycle_graph(5).min_degree() == 2
