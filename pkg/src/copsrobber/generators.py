"""Graph families: theta graphs, chordal accessible pairs, products, hypercubes, grids, random sparse graphs."""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .decomposition import is_chordal
from .errors import ConstructionError, InputError
from .graph import Graph, is_dominating, sun3
from .interval import IntervalRepresentation


# -- theta family ----------------------------------------------------------


def theta_family(m):
    """Hubs ``0..m-1``; every hub pair joined by ``m`` internally disjoint paths of length 3.

    Path vertices follow the hubs, pair by pair in lexicographic order, two
    per path (the one next to the smaller hub first).
    """
    if m < 3:
        raise InputError(f"theta family needs m >= 3, got {m}")
    edges = []
    nxt = m
    for i, j in itertools.combinations(range(m), 2):
        for _ in range(m):
            a, b = nxt, nxt + 1
            nxt += 2
            edges += [(i, a), (a, b), (b, j)]
    return Graph(nxt, edges)


def theta_paths(m):
    """``{(i, j): [(a, b), ...]}`` internal vertices of each hub-to-hub path."""
    out = {}
    nxt = m
    for i, j in itertools.combinations(range(m), 2):
        out[(i, j)] = [(nxt + 2 * p, nxt + 2 * p + 1) for p in range(m)]
        nxt += 2 * m
    return out


def theta_star_decomposition(m):
    """Width ``max(m - 1, 3)`` decomposition: a hub bag with one bag per path."""
    from .decomposition import TreeDecomposition

    bags = [frozenset(range(m))]
    tree_edges = []
    for (i, j), paths in theta_paths(m).items():
        for a, b in paths:
            bags.append(frozenset({i, j, a, b}))
            tree_edges.append((0, len(bags) - 1))
    return TreeDecomposition(Graph(len(bags), tree_edges), tuple(bags))


# -- accessible pairs ------------------------------------------------------


@dataclass(frozen=True)
class AccessibleSplit:
    """How a composite pair is glued from two smaller pairs.

    ``embed[i]`` maps each vertex of ``sides[i]`` other than its ``v`` to its
    id in the composite graph; ``u[i]`` is the clique joined to ``X`` and to
    the image of ``sides[i].x``.
    """

    sides: tuple
    embed: tuple
    u: tuple

    def side_vertices(self, i):
        return frozenset(self.embed[i].values())

    def zone(self, i):
        """``V_i`` together with ``U_i``."""
        return self.side_vertices(i) | self.u[i]


@dataclass(frozen=True)
class AccessiblePairData:
    graph: Graph
    x: frozenset
    v: int
    split: AccessibleSplit | None = field(default=None, repr=False)

    @property
    def size(self):
        return len(self.x)

    def annotation(self):
        return f"X={','.join(map(str, sorted(self.x)))}; v={self.v}"


def _candidate_base():
    g3 = sun3()
    edges = list(g3.edges) + [(0, 6), (1, 6)]
    return AccessiblePairData(Graph(7, edges), frozenset({0, 1}), 6)


def verify_accessible_pair(pair, budget=None):
    """Check all three conditions by exhaustive solving (small graphs only)."""
    from .game import STATE_BUDGET, solve_fixed_k, solve_restricted

    budget = STATE_BUDGET if budget is None else budget
    g, x, v = pair.graph, pair.x, pair.v
    if g.neighbors(v) != x:
        return False
    k = len(x) - 1
    if k >= 1 and solve_fixed_k(g, k, budget).cops_win:
        return False
    return not solve_restricted(g, k, avoid=x | {v}, access=x, budget=budget).cops_win


def _search_base():
    import networkx as nx

    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != 7 or not nx.is_connected(h):
            continue
        g = Graph(7, h.edges())
        if not is_chordal(g)[0]:
            continue
        for v in range(7):
            if g.degree(v) == 2:
                pair = AccessiblePairData(g, g.neighbors(v), v)
                if verify_accessible_pair(pair):
                    return pair
    raise ConstructionError("no 7-vertex chordal graph carries an accessible pair of size 2")


@lru_cache(maxsize=None)
def base_accessible_pair():
    """7-vertex chordal graph with an accessible pair of size 2, verified before use.

    The candidate is the 3-sun with ``X`` one edge of its central triangle
    and ``v`` a new vertex joined to exactly ``X``; if it ever failed the
    check, every connected chordal graph on 7 vertices would be searched.
    """
    pair = _candidate_base()
    if verify_accessible_pair(pair) and is_chordal(pair.graph)[0]:
        return pair
    return _search_base()


def combine_accessible(p1, p2):
    """Glue two pairs with ``|X1| = |X2| = k`` into a pair with ``|X| = 2k``."""
    k = p1.size
    if p2.size != k:
        raise InputError("both pairs must have the same |X|")
    edges = []
    embed = []
    nxt = 0

    def take(pair):
        nonlocal nxt
        emb = {}
        for u in range(pair.graph.n):
            if u != pair.v:
                emb[u] = nxt
                nxt += 1
        for a, b in pair.graph.edges:
            if pair.v not in (a, b):
                edges.append((emb[a], emb[b]))
        return emb

    def block(size):
        nonlocal nxt
        out = frozenset(range(nxt, nxt + size))
        nxt += size
        edges.extend(itertools.combinations(sorted(out), 2))
        return out

    embed.append(take(p1))
    u1 = block(2 * k)
    x = block(2 * k)
    u2 = block(2 * k)
    embed.append(take(p2))
    v = nxt
    nxt += 1

    def join(a, b):
        edges.extend((p, q) for p in a for q in b)

    join({embed[0][t] for t in p1.x}, u1)
    join(u1, x)
    join(x, u2)
    join(u2, {embed[1][t] for t in p2.x})
    join({v}, x)
    split = AccessibleSplit((p1, p2), tuple(embed), (u1, u2))
    return AccessiblePairData(Graph(nxt, edges), x, v, split)


def accessible_vertex_count(m):
    if m == 2:
        return 7
    h = (m + 1) // 2
    return 2 * (accessible_vertex_count(h) - 1) + 6 * h + 1


@lru_cache(maxsize=None)
def chordal_accessible(m):
    """Chordal graph with an accessible pair ``(X, v)``, ``|X| = m``, by repeated doubling."""
    if m < 2 or m & (m - 1):
        raise InputError(f"chordal_accessible needs a power of two >= 2, got {m}")
    if m == 2:
        return base_accessible_pair()
    half = chordal_accessible(m // 2)
    return combine_accessible(half, half)


def accessible_structure_violations(pair):
    """Edge-scan check of the gluing conditions, recursively; empty when fine."""
    out = []
    g, x, v = pair.graph, pair.x, pair.v
    if g.neighbors(v) != x:
        out.append("N(v) differs from X")
    sp = pair.split
    if sp is None:
        return out
    k = pair.size // 2
    sides = [sp.side_vertices(i) for i in range(2)]
    xs = [frozenset(sp.embed[i][t] for t in sp.sides[i].x) for i in range(2)]
    u1, u2 = sp.u
    if not (len(u1) == len(x) == len(u2) == 2 * k and all(s.size == k for s in sp.sides)):
        out.append("part sizes do not match")
    parts = {"V1": sides[0], "U1": u1, "X": x, "U2": u2, "V2": sides[1]}
    allowed = {("V1", "U1"): (xs[0], u1), ("U1", "X"): (u1, x), ("X", "U2"): (x, u2), ("U2", "V2"): (u2, xs[1])}
    names = list(parts)
    for a, b in itertools.combinations(names, 2):
        cross = {(p, q) for p in parts[a] for q in parts[b] if g.has_edge(p, q)}
        if (a, b) in allowed:
            left, right = allowed[(a, b)]
            want = {(p, q) for p in left for q in right}
            if cross != want:
                out.append(f"join {a}-{b} is not exactly complete bipartite on the attachment sets")
        elif cross:
            out.append(f"unexpected edges between {a} and {b}")
    for i in range(2):
        sub = sp.sides[i]
        for a, b in sub.graph.edges:
            if sub.v in (a, b):
                continue
            if not g.has_edge(sp.embed[i][a], sp.embed[i][b]):
                out.append(f"side {i + 1} edge ({a}, {b}) missing")
        out += [f"side {i + 1}: {msg}" for msg in accessible_structure_violations(sub)]
    return out


# -- products --------------------------------------------------------------


class ProductKind(enum.Enum):
    CARTESIAN = "cartesian"
    STRONG = "strong"


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple
    kind: ProductKind = ProductKind.CARTESIAN

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise InputError("a product needs at least one factor")

    @property
    def sizes(self):
        return tuple(f.n for f in self.factors)

    @property
    def n(self):
        out = 1
        for s in self.sizes:
            out *= s
        return out

    def vertex_id(self, coords):
        out = 0
        for c, s in zip(coords, self.sizes):
            out = out * s + c
        return out

    def coords(self, vid):
        out = []
        for s in reversed(self.sizes):
            vid, c = divmod(vid, s)
            out.append(c)
        return tuple(reversed(out))


def _product(spec):
    verts = list(itertools.product(*(range(s) for s in spec.sizes)))
    edges = []
    for a in verts:
        for b in verts:
            if a >= b:
                continue
            rel = [x == y or f.has_edge(x, y) for x, y, f in zip(a, b, spec.factors)]
            diff = sum(x != y for x, y in zip(a, b))
            if spec.kind is ProductKind.CARTESIAN:
                ok = diff == 1 and all(rel)
            else:
                ok = all(rel)
            if ok:
                edges.append((spec.vertex_id(a), spec.vertex_id(b)))
    return Graph(spec.n, edges)


def cartesian_product(spec):
    """Product graph with tuple vertices numbered row-major (last factor fastest)."""
    if not isinstance(spec, ProductSpec):
        spec = ProductSpec(tuple(spec))
    return _product(ProductSpec(spec.factors, ProductKind.CARTESIAN))


def strong_product(spec):
    if not isinstance(spec, ProductSpec):
        spec = ProductSpec(tuple(spec), ProductKind.STRONG)
    return _product(ProductSpec(spec.factors, ProductKind.STRONG))


def strong_product_path_clique(m, length=None):
    """``P_{3m}`` strong ``K_m`` with an interval representation.

    Vertex ``(i, j)`` has id ``i*m + j`` and interval
    ``[i + e*j, i + 1 + e*(m + j)]`` with ``e = 1/(4m)``: consecutive path
    positions overlap, positions two apart do not, and all endpoints differ.
    ``length`` overrides the path length ``3m``.
    """
    from .graph import complete_graph, path_graph

    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    length = 3 * m if length is None else length
    if length < 1:
        raise InputError("path length must be >= 1")
    g = strong_product(ProductSpec((path_graph(length), complete_graph(m)), ProductKind.STRONG))
    eps = Fraction(1, 4 * m)
    ivs = [(i + eps * j, i + 1 + eps * (m + j)) for i in range(length) for j in range(m)]
    return g, IntervalRepresentation(ivs)


def hypercube(m):
    if m < 1:
        raise InputError(f"hypercube dimension must be >= 1, got {m}")
    n = 1 << m
    return Graph(n, [(u, u ^ (1 << b)) for u in range(n) for b in range(m) if u < u ^ (1 << b)])


def hamming_code(h):
    """Words of length ``h = 2^r - 1`` whose set bit positions (1-based) XOR to zero."""
    out = []
    for w in range(1 << h):
        s = 0
        for i in range(h):
            if w >> i & 1:
                s ^= i + 1
        if s == 0:
            out.append(w)
    return out


def hypercube_dominating_set(m):
    """Perfect Hamming code on the largest ``2^r - 1 <= m`` coordinates, doubled across the rest."""
    if m < 1:
        raise InputError(f"hypercube dimension must be >= 1, got {m}")
    r = (m + 1).bit_length() - 1
    h = (1 << r) - 1
    words = hamming_code(h)
    for extra in range(m - h):
        bit = 1 << (h + extra)
        words = words + [w | bit for w in words]
    out = frozenset(words)
    if not is_dominating(hypercube(m), out):
        raise ConstructionError(f"hypercube dominating set for m={m} does not dominate")
    return out


def grid(r, c=None):
    """``r x c`` grid (square by default), vertex ``(i, j)`` has id ``i*c + j``."""
    c = r if c is None else c
    if r < 1 or c < 1:
        raise InputError("grid sides must be >= 1")
    edges = []
    for i in range(r):
        for j in range(c):
            if i + 1 < r:
                edges.append((i * c + j, (i + 1) * c + j))
            if j + 1 < c:
                edges.append((i * c + j, i * c + j + 1))
    return Graph(r * c, edges)


# -- random sparse ---------------------------------------------------------


def _pair_from_index(n, idx):
    # lexicographic order of pairs (u, v), u < v
    u = 0
    while idx >= n - 1 - u:
        idx -= n - 1 - u
        u += 1
    return u, u + 1 + idx


def random_sparse(n, seed):
    """Uniform graph with ``n`` vertices and ``2n`` edges.

    Edges are ``random.Random(seed).sample`` (Mersenne Twister) over the
    lexicographic list of vertex pairs, so the output is portable.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    total = comb(n, 2)
    m = 2 * n
    if m > total:
        raise InputError(f"{m} edges do not fit on {n} vertices")
    picks = random.Random(seed).sample(range(total), m)
    return Graph(n, [_pair_from_index(n, i) for i in sorted(picks)])


def random_sparse_stripped(n, seed, degree_cap):
    """``random_sparse`` minus every vertex whose degree exceeds ``degree_cap``; survivors keep their order."""
    g = random_sparse(n, seed)
    keep = [v for v in range(n) if g.degree(v) <= degree_cap]
    sub, _ = g.subgraph(keep)
    return sub
