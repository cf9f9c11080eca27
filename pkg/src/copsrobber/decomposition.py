"""Tree decompositions, chordality certificates and exact treewidth."""

from __future__ import annotations

import io
from dataclasses import dataclass

from .errors import CapabilityError, InputError
from .graph import Graph, component_masks, from_mask, to_mask, _data_lines

TREEWIDTH_LIMIT = 18


@dataclass(frozen=True)
class TreeDecomposition:
    """A tree (as a :class:`Graph` on node ids) plus one bag per tree node."""

    tree: Graph
    bags: tuple

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        if len(self.bags) != self.tree.n:
            raise InputError(f"{len(self.bags)} bags for a tree with {self.tree.n} nodes")

    @property
    def width(self):
        return max((len(b) for b in self.bags), default=0) - 1

    def nodes_containing(self, v):
        return [t for t, b in enumerate(self.bags) if v in b]

    def split(self, t1, t2):
        """Vertex unions of the two sides of tree edge ``t1 t2`` (``t1``'s side first)."""
        side = {t1}
        stack = [t1]
        while stack:
            t = stack.pop()
            for s in self.tree.neighbors(t):
                if s not in side and not (t == t1 and s == t2):
                    side.add(s)
                    stack.append(s)
        u1 = set().union(*(self.bags[t] for t in side))
        u2 = set().union(*(self.bags[t] for t in range(self.tree.n) if t not in side))
        return frozenset(u1), frozenset(u2), frozenset(side)

    def tree_path(self, start, goal):
        """Node sequence of the unique tree path."""
        prev = {start: None}
        stack = [start]
        while stack:
            t = stack.pop()
            for s in sorted(self.tree.neighbors(t)):
                if s not in prev:
                    prev[s] = t
                    stack.append(s)
        if goal not in prev:
            raise InputError(f"tree nodes {start} and {goal} are not connected")
        path = [goal]
        while path[-1] != start:
            path.append(prev[path[-1]])
        return path[::-1]


# -- chordality ----------------------------------------------------------


def maximum_cardinality_search(g):
    """Visit order of maximum cardinality search, ties to the smallest id."""
    weight = [0] * g.n
    done = [False] * g.n
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not done[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        done[best] = True
        order.append(best)
        for w in g.neighbors(best):
            if not done[w]:
                weight[w] += 1
    return order


def is_perfect_elimination_order(g, order):
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if not g.has_edge(a, b):
                    return False
    return True


def is_chordal(g):
    """Return ``(True, peo)`` or ``(False, None)``.

    The candidate order is the reverse of a maximum cardinality search; it is
    a perfect elimination order exactly when the graph is chordal.
    """
    peo = tuple(reversed(maximum_cardinality_search(g)))
    if is_perfect_elimination_order(g, peo):
        return True, peo
    return False, None


def _merge_subset_bags(bags, tree_edges):
    """Contract tree edges whose one bag is contained in the other."""
    bags = dict(enumerate(bags))
    adj = {t: set() for t in bags}
    for a, b in tree_edges:
        adj[a].add(b)
        adj[b].add(a)
    changed = True
    while changed:
        changed = False
        for a in sorted(adj):
            for b in sorted(adj[a]):
                if bags[a] <= bags[b]:
                    for c in adj[a]:
                        if c != b:
                            adj[c].discard(a)
                            adj[c].add(b)
                            adj[b].add(c)
                    adj[b].discard(a)
                    del adj[a]
                    del bags[a]
                    changed = True
                    break
            if changed:
                break
    keep = sorted(bags)
    index = {t: i for i, t in enumerate(keep)}
    edges = {(min(index[a], index[b]), max(index[a], index[b])) for a in adj for b in adj[a]}
    return [bags[t] for t in keep], edges


def clique_tree_decomposition(g, peo):
    """Clique tree from a perfect elimination order; bags are the maximal cliques."""
    if not is_perfect_elimination_order(g, list(peo)):
        raise InputError("order is not a perfect elimination order of the graph")
    if g.n == 0:
        return TreeDecomposition(Graph(0), ())
    pos = {v: i for i, v in enumerate(peo)}
    bags = []
    edges = []
    roots = []
    for i, v in enumerate(peo):
        later = [w for w in g.neighbors(v) if pos[w] > i]
        bags.append(frozenset([v, *later]))
        if later:
            edges.append((i, pos[min(later, key=pos.__getitem__)]))
        else:
            roots.append(i)
    edges += [(roots[i], roots[i + 1]) for i in range(len(roots) - 1)]
    bags, edges = _merge_subset_bags(bags, edges)
    return TreeDecomposition(Graph(len(bags), edges), tuple(bags))


# -- validation ----------------------------------------------------------


def _is_tree(t):
    if t.n == 0:
        return True
    return t.edge_count == t.n - 1 and t.is_connected()


def tree_decomposition_violations(g, td):
    """Human-readable list of broken conditions; empty when ``td`` is valid."""
    problems = []
    if not _is_tree(td.tree):
        problems.append("index graph is not a tree")
    covered = set().union(*td.bags) if td.bags else set()
    if covered != set(range(g.n)):
        problems.append(f"bags miss vertices {sorted(set(range(g.n)) - covered)}; extra {sorted(covered - set(range(g.n)))}")
    for u, v in g.sorted_edges():
        if not any(u in b and v in b for b in td.bags):
            problems.append(f"edge ({u}, {v}) lies in no bag")
    for v in range(g.n):
        nodes = td.nodes_containing(v)
        if nodes:
            sub, _ = td.tree.subgraph(nodes)
            if not sub.is_connected():
                problems.append(f"bags containing {v} do not form a subtree")
    return problems


def validate_tree_decomposition(g, td):
    return not tree_decomposition_violations(g, td)


def separator_violations(g, td):
    """Tree edges whose bag intersection fails to separate the two sides.

    For tree edge ``t1 t2`` with ``X = W_t1 ∩ W_t2`` there must be no edge of
    ``g`` between ``U1 - X`` and ``U2 - X``.
    """
    bad = []
    for t1, t2 in td.tree.sorted_edges():
        x = td.bags[t1] & td.bags[t2]
        u1, u2, _ = td.split(t1, t2)
        a, b = u1 - x, u2 - x
        if any((u in a and v in b) or (u in b and v in a) for u, v in g.edges):
            bad.append((t1, t2))
    return bad


# -- elimination orders --------------------------------------------------


def elimination_width(g, order):
    """Width of the decomposition induced by eliminating vertices in ``order``."""
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    width = 0 if g.n else -1
    for v in order:
        nb = adj[v]
        width = max(width, len(nb))
        for a in nb:
            adj[a] |= nb
            adj[a].discard(a)
            adj[a].discard(v)
        adj[v] = set()
    return width


def decomposition_from_order(g, order):
    """Tree decomposition whose bags are ``{v} ∪`` the later filled neighbours of ``v``."""
    if sorted(order) != list(range(g.n)):
        raise InputError("elimination order must be a permutation of the vertices")
    if g.n == 0:
        return TreeDecomposition(Graph(0), ())
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    bags, edges, roots = [], [], []
    for i, v in enumerate(order):
        nb = adj[v]
        bags.append(frozenset(nb | {v}))
        if nb:
            edges.append((i, min(pos[w] for w in nb)))
        else:
            roots.append(i)
        for a in nb:
            adj[a] |= nb
            adj[a].discard(a)
            adj[a].discard(v)
    edges += [(roots[i], roots[i + 1]) for i in range(len(roots) - 1)]
    return TreeDecomposition(Graph(len(bags), edges), tuple(bags))


# -- exact treewidth -----------------------------------------------------


def minor_min_width(g):
    """Lower bound on treewidth: contract min-degree vertices into min-degree neighbours."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    lb = 0
    while len(adj) > 1:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        lb = max(lb, len(adj[v]))
        if not adj[v]:
            del adj[v]
            continue
        u = min(adj[v], key=lambda x: (len(adj[x]), x))
        for w in adj[v]:
            adj[w].discard(v)
            if w != u:
                adj[w].add(u)
                adj[u].add(w)
        del adj[v]
    return lb


def _reduce(adj, k):
    """Eliminate almost simplicial vertices of degree <= k while any exist.

    Safe for the question "tw <= k": eliminating such a vertex is a
    contraction (or deletion), so the rest never gets wider.  Returns the
    eliminated vertices, or ``None`` when a simplicial vertex proves tw > k.
    """
    order = []
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            nb = adj[v]
            if len(nb) > k:
                simplicial = all(b in adj[a] for a in nb for b in nb if a < b)
                if simplicial:
                    return None
                continue
            if _almost_simplicial(adj, nb):
                for a in nb:
                    adj[a] |= nb
                    adj[a].discard(a)
                    adj[a].discard(v)
                del adj[v]
                order.append(v)
                changed = True
                break
    return order


def _almost_simplicial(adj, nb):
    nb = list(nb)
    missing = [(a, b) for i, a in enumerate(nb) for b in nb[i + 1:] if b not in adj[a]]
    if not missing:
        return True
    common = set(missing[0])
    for a, b in missing[1:]:
        common &= {a, b}
        if not common:
            return False
    return True


def _decide(g, k, limit):
    """Elimination order of width <= k, or None."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    prefix = _reduce(adj, k)
    if prefix is None:
        return None
    rest = sorted(adj)
    r = len(rest)
    if r <= k + 1:
        return prefix + rest
    if r > limit:
        raise CapabilityError(f"exact treewidth limited to {limit} vertices after reduction, kernel has {r}")
    index = {v: i for i, v in enumerate(rest)}
    masks = [to_mask(index[w] for w in adj[v]) for v in rest]
    local = Graph(r, [(index[a], index[b]) for a in rest for b in adj[a] if a < b])
    full = (1 << r) - 1
    parent = {0: None}
    frontier = [0]
    goal = None
    while frontier and goal is None:
        nxt = []
        for s in frontier:
            comps = component_masks(local, full & ~s)
            comp_nb = [(c, _nbmask(masks, c) & ~s) for c in comps]
            rest_mask = full & ~s
            m = rest_mask
            while m:
                low = m & -m
                m ^= low
                v = low.bit_length() - 1
                q = masks[v] & ~s
                for c, nbm in comp_nb:
                    if masks[v] & c:
                        q |= nbm
                q &= ~low
                if q.bit_count() > k:
                    continue
                s2 = s | low
                if s2 in parent:
                    continue
                parent[s2] = (s, v)
                if r - s2.bit_count() <= k + 1:
                    goal = s2
                    break
                nxt.append(s2)
            if goal is not None:
                break
        frontier = nxt
    if goal is None:
        return None
    seq = []
    s = goal
    while parent[s] is not None:
        s, v = parent[s]
        seq.append(v)
    seq.reverse()
    tail = [i for i in range(r) if not goal >> i & 1]
    return prefix + [rest[i] for i in seq + tail]


def _nbmask(masks, comp):
    out = 0
    m = comp
    while m:
        low = m & -m
        m ^= low
        out |= masks[low.bit_length() - 1]
    return out


def treewidth_exact(g, limit=TREEWIDTH_LIMIT):
    """Exact treewidth and a witness decomposition of that width.

    Iterative deepening on the width ``k``: safe almost-simplicial reductions
    shrink the graph, then a breadth-first search over eliminated vertex
    subsets decides whether some elimination order stays within ``k``.  The
    ``limit`` caps the size of the kernel that reaches the subset search.
    """
    if g.n == 0:
        return -1, TreeDecomposition(Graph(0), ())
    k = max(minor_min_width(g), 0)
    while True:
        order = _decide(g, k, limit)
        if order is not None:
            td = decomposition_from_order(g, order)
            if td.width != k:
                raise AssertionError(f"order of width {td.width} returned for k={k}")
            return k, td
        k += 1


# -- serialisation -------------------------------------------------------


def format_decomposition(td):
    """``"t e"`` header, one ``"id k v1 .. vk"`` line per node, then ``e`` tree edges."""
    out = io.StringIO()
    edges = td.tree.sorted_edges()
    out.write(f"{td.tree.n} {len(edges)}\n")
    for t, bag in enumerate(td.bags):
        out.write(" ".join(str(x) for x in [t, len(bag), *sorted(bag)]) + "\n")
    for a, b in edges:
        out.write(f"{a} {b}\n")
    return out.getvalue()


def parse_decomposition(text):
    lines = list(_data_lines(text))
    try:
        t, e = (int(x) for x in lines[0].split())
        bags = [None] * t
        for line in lines[1:1 + t]:
            nums = [int(x) for x in line.split()]
            node, size, members = nums[0], nums[1], nums[2:]
            if len(members) != size:
                raise InputError(f"bag line {line!r} announces {size} members")
            bags[node] = frozenset(members)
        edges = [tuple(int(x) for x in line.split()) for line in lines[1 + t:1 + t + e]]
    except (ValueError, IndexError, TypeError) as exc:
        raise InputError(f"malformed decomposition: {exc}") from exc
    if any(b is None for b in bags) or len(lines) != 1 + t + e:
        raise InputError("malformed decomposition: node lines do not match the header")
    return TreeDecomposition(Graph(t, edges), tuple(bags))


__all__ = [
    "TreeDecomposition",
    "clique_tree_decomposition",
    "decomposition_from_order",
    "elimination_width",
    "from_mask",
    "is_chordal",
    "maximum_cardinality_search",
    "separator_violations",
    "tree_decomposition_violations",
    "treewidth_exact",
    "validate_tree_decomposition",
]
