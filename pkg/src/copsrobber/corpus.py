"""Fixed graph collections used by the verification suites and the tests."""

from __future__ import annotations

import random
from functools import lru_cache

from .generators import (base_accessible_pair, cartesian_product, grid, hypercube,
                         strong_product_path_clique)
from .graph import Graph, complete_graph, cycle_graph, path_graph, star_graph, sun3
from .interval import distinct_endpoints, intersection_graph

DEFAULT_SEEDS = tuple(range(12))


@lru_cache(maxsize=None)
def connected_atlas(max_n=7):
    """Every connected graph on 1..max_n vertices (max_n <= 7), in atlas order."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(Graph(h.number_of_nodes(), h.edges()))
    return tuple(out)


@lru_cache(maxsize=None)
def named_instances(max_n=9):
    """Named graphs up to ``max_n`` vertices: ``((name, graph), ...)``."""
    items = [("K6", complete_graph(6)), ("P8", path_graph(8)), ("P9", path_graph(9)),
             ("C8", cycle_graph(8)), ("C9", cycle_graph(9)), ("star8", star_graph(8)),
             ("sun3", sun3()), ("accessible2", base_accessible_pair().graph),
             ("Q3", hypercube(3)), ("grid3", grid(3)), ("grid2x4", grid(2, 4)),
             ("K3xK3", cartesian_product([complete_graph(3)] * 2)),
             ("K2xK4", cartesian_product([complete_graph(2), complete_graph(4)])),
             ("P3xK2", cartesian_product([path_graph(3), complete_graph(2)])),
             ("C4xK2", cartesian_product([cycle_graph(4), complete_graph(2)])),
             ("SP(P6,K1)", strong_product_path_clique(1, length=6)[0])]
    return tuple((name, g) for name, g in items if g.n <= max_n)


def random_interval_representation(n, seed):
    """Connected random interval graph on ``n`` vertices with distinct endpoints.

    Left endpoints are drawn left to right; each new interval starts inside
    the span covered so far, which keeps the graph connected.
    """
    rng = random.Random(seed)
    pairs = []
    reach = 0
    for i in range(n):
        lo = 0 if i == 0 else rng.randint(max(0, reach - 6), reach)
        hi = lo + rng.randint(1, 8)
        reach = max(reach, hi)
        pairs.append((lo, hi))
    return distinct_endpoints(pairs)


@lru_cache(maxsize=None)
def interval_corpus(max_n=12, seeds=DEFAULT_SEEDS):
    """``((name, graph, rep), ...)``: the strong products for m = 1, 2, 3, then random graphs on 2..max_n vertices."""
    out = []
    for m in (1, 2, 3):
        g, rep = strong_product_path_clique(m)
        out.append((f"SP(P{3 * m},K{m})", g, rep))
    for n in range(2, max_n + 1):
        for seed in seeds:
            rep = random_interval_representation(n, seed)
            out.append((f"rand(n={n},seed={seed})", intersection_graph(rep), rep))
    return tuple(out)
