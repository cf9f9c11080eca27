"""Immutable simple graphs and the structural queries everything else uses.

Vertices are ``0 .. n-1``.  Vertex sets are passed around as ordinary Python
sets / frozensets; internally a lot of the heavier routines work on integer
bitmasks, exposed through :meth:`Graph.mask` and :meth:`Graph.closed_mask`.
"""

from __future__ import annotations

import io
import itertools
from collections import deque

from .errors import CapabilityError, InputError

DOMINATION_LIMIT = 24


class Graph:
    """Finite simple undirected graph.  Never mutated after construction."""

    __slots__ = ("_n", "_edges", "_adj", "_masks", "_hash")

    def __init__(self, n, edges=()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._edges = frozenset(norm)
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = tuple(sum(1 << w for w in a) for a in adj)
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def n(self):
        return self._n

    @property
    def edges(self):
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    def vertices(self):
        return range(self._n)

    def sorted_edges(self):
        return sorted(self._edges)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj[u]

    def max_degree(self):
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self):
        return min((len(a) for a in self._adj), default=0)

    def mask(self, v):
        """Bitmask of the open neighbourhood of ``v``."""
        return self._masks[v]

    def closed_mask(self, v):
        return self._masks[v] | (1 << v)

    @property
    def full_mask(self):
        return (1 << self._n) - 1

    def is_complete(self):
        return self.edge_count == self._n * (self._n - 1) // 2

    def is_connected(self):
        if self._n == 0:
            return True
        return len(connected_components(self)) == 1

    def subgraph(self, vertices):
        """Induced subgraph, relabelled to ``0..k-1`` in increasing vertex order.

        Returns ``(h, order)`` where ``order[i]`` is the original id of vertex ``i``.
        """
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        for v in order:
            _check_vertex(self, v)
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(order), edges), order

    def distances_from(self, source, blocked=frozenset()):
        """BFS distances from ``source`` avoiding ``blocked`` vertices."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in sorted(self._adj[u]):
                if w not in dist and w not in blocked:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def all_pairs_distances(self):
        return [self.distances_from(v) for v in range(self._n)]

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.edge_count})"


def _check_vertex(g, v):
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise InputError(f"vertex {v!r} out of range 0..{g.n - 1}")


def _check_set(g, a):
    for v in a:
        _check_vertex(g, v)


def to_mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def closed_mask_of(g, mask):
    """Closed neighbourhood of a vertex bitmask, as a bitmask."""
    out = mask
    m = mask
    while m:
        low = m & -m
        out |= g.mask(low.bit_length() - 1)
        m ^= low
    return out


# -- neighbourhoods and domination ---------------------------------------


def closed_neighborhood(g, a):
    """Return ``A ∪ N(A)`` as a frozenset."""
    _check_set(g, a)
    out = set(a)
    for v in a:
        out |= g.neighbors(v)
    return frozenset(out)


def is_dominating(g, a):
    return len(closed_neighborhood(g, a)) == g.n


def min_cover_size(g, target, max_size=None, candidates=None):
    """Smallest number of vertices of ``g`` whose closed neighbourhood contains ``target``.

    Exhaustive, by increasing size.  With ``max_size`` the search stops early
    and returns ``max_size + 1`` when no cover of that size exists.
    """
    target_mask = to_mask(target)
    if not target_mask:
        return 0
    if candidates is None:
        candidates = from_mask(closed_mask_of(g, target_mask))
    cm = [g.closed_mask(v) & target_mask for v in candidates]
    limit = len(candidates) if max_size is None else min(max_size, len(candidates))
    for size in range(1, limit + 1):
        for combo in itertools.combinations(cm, size):
            acc = 0
            for m in combo:
                acc |= m
            if acc == target_mask:
                return size
    return limit + 1


def minimum_dominating_set(g, limit=DOMINATION_LIMIT):
    """One minimum dominating set (lexicographically first among the smallest)."""
    if g.n > limit:
        raise CapabilityError(f"exhaustive domination limited to {limit} vertices, graph has {g.n}")
    if g.n == 0:
        return frozenset()
    full = g.full_mask
    cm = [g.closed_mask(v) for v in range(g.n)]
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            acc = 0
            for v in combo:
                acc |= cm[v]
            if acc == full:
                return frozenset(combo)
    raise AssertionError("unreachable: V(G) always dominates")


def domination_number_exact(g, limit=DOMINATION_LIMIT):
    return len(minimum_dominating_set(g, limit=limit))


def all_minimum_dominating_sets(g, limit=DOMINATION_LIMIT):
    """Every dominating set of minimum size, in lexicographic order."""
    size = domination_number_exact(g, limit=limit)
    full = g.full_mask
    cm = [g.closed_mask(v) for v in range(g.n)]
    out = []
    for combo in itertools.combinations(range(g.n), size):
        acc = 0
        for v in combo:
            acc |= cm[v]
        if acc == full:
            out.append(frozenset(combo))
    return out


def greedy_dominating_set(g):
    """Cheap upper bound: repeatedly take the vertex covering most undominated vertices."""
    left = g.full_mask
    chosen = []
    while left:
        best = max(range(g.n), key=lambda v: ((g.closed_mask(v) & left).bit_count(), -v))
        chosen.append(best)
        left &= ~g.closed_mask(best)
    return frozenset(chosen)


# -- components and connectivity -----------------------------------------


def component_masks(g, removed_mask=0):
    """Components of ``g - removed`` as bitmasks, ordered by smallest vertex."""
    left = g.full_mask & ~removed_mask
    comps = []
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = g.mask(low.bit_length() - 1) & left & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps


def connected_components(g, removed=()):
    """Partition of ``V(g) - removed`` into the vertex sets of connected components."""
    _check_set(g, removed)
    return [frozenset(from_mask(c)) for c in component_masks(g, to_mask(removed))]


def _max_flow(g, s, t):
    """Internally disjoint s-t paths for non-adjacent s, t, plus the residual side of s.

    Unit vertex capacities via the usual in/out split, augmenting along BFS
    shortest paths.
    """
    big = g.n + 1
    cap = {}

    def add(u, v, c):
        cap.setdefault(u, {})
        cap.setdefault(v, {})
        cap[u][v] = cap[u].get(v, 0) + c
        cap[v].setdefault(u, 0)

    for v in range(g.n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for w, c in cap[u].items():
                if c > 0 and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if sink not in parent:
            return flow, set(parent)
        w = sink
        while parent[w] is not None:
            u = parent[w]
            cap[u][w] -= 1
            cap[w][u] += 1
            w = u
        flow += 1


def _local_connectivity(g, s, t):
    return _max_flow(g, s, t)[0]


def minimum_separator(g):
    """A smallest vertex set whose removal disconnects ``g``; ``None`` if ``g`` is complete."""
    if g.is_complete():
        return None
    if not g.is_connected():
        return frozenset()
    best = None
    for i in range(g.n):
        if best is not None and i > len(best):
            break
        for j in range(g.n):
            if j != i and not g.has_edge(i, j):
                flow, side = _max_flow(g, i, j)
                if best is None or flow < len(best):
                    best = frozenset(v for v in range(g.n) if 2 * v in side and 2 * v + 1 not in side)
    return best


def vertex_connectivity(g):
    """Vertex connectivity; ``n - 1`` for complete graphs, 0 when disconnected."""
    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    if g.is_complete():
        return n - 1
    best = n - 1
    for i in range(n):
        if i > best:
            break
        for j in range(n):
            if j != i and not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j))
    return best


def is_k_connected(g, k):
    """Connected and (for k >= 2) no separator of fewer than k vertices.

    ``k <= 1`` only asks for a connected, non-empty graph, so a single vertex
    counts as 1-connected.
    """
    if g.n == 0:
        return k <= 0
    if not g.is_connected():
        return False
    if k <= 1:
        return True
    return vertex_connectivity(g) >= k


# -- contraction ---------------------------------------------------------


def contract_edge(g, e):
    """Identify the endpoints of ``e``; the merged vertex keeps the smaller id.

    Vertices above the removed (larger) endpoint shift down by one.
    """
    u, v = e
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    keep, drop = min(u, v), max(u, v)

    def relabel(x):
        if x == drop:
            x = keep
        return x - 1 if x > drop else x

    edges = set()
    for a, b in g.edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph(g.n - 1, edges)


# -- text format ---------------------------------------------------------


def _data_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_graph(text):
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    lines = list(_data_lines(text))
    if not lines:
        raise InputError("empty graph file")
    try:
        head = [int(t) for t in lines[0].split()]
    except ValueError as exc:
        raise InputError(f"bad header line {lines[0]!r}") from exc
    if len(head) != 2:
        raise InputError(f"header must be 'n m', got {lines[0]!r}")
    n, m = head
    if len(lines) - 1 != m:
        raise InputError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputError(f"bad edge line {line!r}") from exc
    if len(set((min(a, b), max(a, b)) for a, b in edges)) != len(edges):
        raise InputError("duplicate edge in graph file")
    return Graph(n, edges)


def format_graph(g, comment=None):
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    out.write(f"{g.n} {g.edge_count}\n")
    for u, v in g.sorted_edges():
        out.write(f"{u} {v}\n")
    return out.getvalue()


def read_graph(path):
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


# -- small named graphs --------------------------------------------------


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def sun3():
    """Triangle 0-1-2 with ears 3~{0,1}, 4~{1,2}, 5~{2,0}."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])
