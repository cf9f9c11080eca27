"""k-wide subgraphs: k-connected and not closed-dominated by fewer than k vertices."""

from __future__ import annotations

from .errors import CapabilityError, InputError
from .graph import connected_components, is_k_connected, min_cover_size, minimum_separator, vertex_connectivity

WIDE_LIMIT = 32


def _induced(g, h):
    h = sorted(set(h))
    for v in h:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
    return h


def _check_size(g, limit):
    if g.n > limit:
        raise CapabilityError(f"exhaustive wideness check limited to {limit} vertices, graph has {g.n}")


def is_k_wide(g, h, k, limit=WIDE_LIMIT):
    """Whether ``g[h]`` is k-connected and no ``S ⊆ V(g)`` with ``|S| < k`` has ``h ⊆ N̄(S)``.

    The domination condition ranges over vertex sets of the whole graph.
    """
    _check_size(g, limit)
    h = _induced(g, h)
    if not h:
        return k <= 0
    sub, _ = g.subgraph(h)
    if not is_k_connected(sub, k):
        return False
    return min_cover_size(g, h, max_size=k - 1) >= k


def wideness(g, h, limit=WIDE_LIMIT):
    """Largest ``k`` such that ``g[h]`` is k-wide (0 if ``h`` is empty or disconnected)."""
    _check_size(g, limit)
    h = _induced(g, h)
    if not h:
        return 0
    sub, _ = g.subgraph(h)
    if not sub.is_connected():
        return 0
    conn = max(1, vertex_connectivity(sub))
    return min(conn, min_cover_size(g, h, max_size=conn))


def _core(g, verts, k):
    verts = set(verts)
    changed = True
    while changed:
        changed = False
        for v in sorted(verts):
            if len(g.neighbors(v) & verts) < k:
                verts.discard(v)
                changed = True
    return verts


def maximal_k_connected(g, k):
    """Vertex sets of the maximal k-connected induced subgraphs of ``g``.

    A separator of fewer than ``k`` vertices splits no k-connected subgraph,
    so splitting along minimum separators and re-coring finds them all.
    """
    if k <= 1:
        return sorted(connected_components(g), key=min)
    found = set()
    stack = [frozenset(range(g.n))]
    while stack:
        part = _core(g, stack.pop(), k)
        if len(part) <= k:
            continue
        sub, order = g.subgraph(part)
        for comp in connected_components(sub):
            if len(comp) <= k:
                continue
            piece, porder = sub.subgraph(comp)
            sep = minimum_separator(piece)
            verts = frozenset(order[porder[v]] for v in range(piece.n))
            if sep is None or len(sep) >= k:
                found.add(verts)
                continue
            for rest in connected_components(piece, sep):
                stack.append(frozenset(order[porder[v]] for v in rest | sep))
    maximal = [s for s in found if not any(s < t for t in found)]
    return sorted(maximal, key=lambda s: (min(s), sorted(s)))


def max_wide_subgraph(g, limit=WIDE_LIMIT):
    """Largest ``k`` with a k-wide induced subgraph, and one witness vertex set.

    Enlarging a k-connected subgraph only makes it harder to dominate, so the
    maximal k-connected subgraphs are the only candidates; k-wideness for
    ``k`` implies it for ``k - 1``, so the search stops at the first failure.
    """
    _check_size(g, limit)
    if g.n == 0:
        return 0, frozenset()
    best, witness = 0, frozenset()
    k = 1
    while True:
        hit = None
        for piece in maximal_k_connected(g, k):
            if min_cover_size(g, sorted(piece), max_size=k - 1) >= k:
                hit = piece
                break
        if hit is None:
            return best, witness
        best, witness = k, hit
        k += 1
