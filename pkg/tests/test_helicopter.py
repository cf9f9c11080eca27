import pytest
from hypothesis import given, settings

from copsrobber.errors import CapabilityError
from copsrobber.generators import grid
from copsrobber.graph import Graph, complete_graph, cycle_graph, path_graph
from copsrobber.helicopter import cops_win_helicopter, helicopter_min_cops
from oracles import brute_force_treewidth, graphs


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7))
def test_helicopter_is_treewidth_plus_one(g):
    assert helicopter_min_cops(g) == brute_force_treewidth(g) + 1


@pytest.mark.parametrize("g, h", [(complete_graph(5), 5), (path_graph(6), 2), (cycle_graph(6), 3), (Graph(1), 1)])
def test_known_values(g, h):
    assert helicopter_min_cops(g) == h
    assert cops_win_helicopter(g, h) and not cops_win_helicopter(g, h - 1)


def test_size_limit():
    with pytest.raises(CapabilityError):
        helicopter_min_cops(grid(4), limit=10)
