"""Interval representations, clique slices, w(G) and the 3-approximation.

Slices are indexed from 0: ``slices[i]`` holds the vertices whose interval
contains the midpoint of the ``i``-th gap between consecutive distinct
endpoints.  Interval subgraph ``[a, b]`` is induced by ``slices[a..b]``
(both ends inclusive).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .graph import Graph, _data_lines


class IntervalRepresentation:
    """One closed interval ``[l, r]`` per vertex, with all 2n endpoints distinct."""

    __slots__ = ("intervals",)

    def __init__(self, intervals):
        ivs = []
        for i, (lo, hi) in enumerate(intervals):
            lo, hi = Fraction(lo), Fraction(hi)
            if not lo < hi:
                raise InputError(f"interval {i} = [{lo}, {hi}] must have positive length")
            ivs.append((lo, hi))
        ends = [x for iv in ivs for x in iv]
        if len(set(ends)) != len(ends):
            raise InputError("interval endpoints must be pairwise distinct; "
                             "repair with distinct_endpoints(), which perturbs by rank")
        self.intervals = tuple(ivs)

    @property
    def n(self):
        return len(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __getitem__(self, v):
        return self.intervals[v]

    def __eq__(self, other):
        return isinstance(other, IntervalRepresentation) and self.intervals == other.intervals

    def __repr__(self):
        return f"IntervalRepresentation(n={self.n})"


def distinct_endpoints(pairs):
    """Replace endpoints by ranks so they become distinct, keeping every intersection.

    At a shared coordinate left endpoints are ranked before right endpoints,
    so intervals that touched still overlap.
    """
    events = []
    for v, (lo, hi) in enumerate(pairs):
        events.append((Fraction(lo), 0, v))
        events.append((Fraction(hi), 1, v))
    events.sort()
    out = [[None, None] for _ in pairs]
    for rank, (_, side, v) in enumerate(events):
        out[v][side] = rank
    return IntervalRepresentation([tuple(p) for p in out])


def intersection_graph(rep):
    edges = []
    ivs = rep.intervals
    for u in range(len(ivs)):
        for v in range(u + 1, len(ivs)):
            if ivs[u][0] <= ivs[v][1] and ivs[v][0] <= ivs[u][1]:
                edges.append((u, v))
    return Graph(len(ivs), edges)


def validate_representation(g, rep):
    return rep.n == g.n and intersection_graph(rep) == g


@dataclass(frozen=True)
class SliceSequence:
    rep: IntervalRepresentation
    xs: tuple
    ys: tuple
    slices: tuple

    @property
    def l(self):
        return len(self.slices)

    def span(self, v):
        """First and last slice index containing vertex ``v``."""
        idx = [i for i, s in enumerate(self.slices) if v in s]
        return idx[0], idx[-1]

    def vertices(self, a, b):
        """Vertex set of interval subgraph ``[a, b]``."""
        if not 0 <= a <= b < self.l:
            raise InputError(f"slice range [{a}, {b}] outside 0..{self.l - 1}")
        return frozenset().union(*self.slices[a:b + 1])


def slice_sequence(rep):
    xs = tuple(sorted({x for iv in rep.intervals for x in iv}))
    ys = tuple((xs[i] + xs[i + 1]) / 2 for i in range(len(xs) - 1))
    slices = tuple(frozenset(v for v, (lo, hi) in enumerate(rep.intervals) if lo < y < hi) for y in ys)
    return SliceSequence(rep, xs, ys, slices)


def _spans(sl):
    first, last = {}, {}
    for i, s in enumerate(sl.slices):
        for v in s:
            first.setdefault(v, i)
            last[v] = i
    return first, last


def cut_point_indices(sl, a=None, b=None):
    """Slice indices ``i`` of interval subgraph ``[a, b]`` with one of its vertices
    entirely left of the sample point and another entirely right."""
    a = 0 if a is None else a
    b = sl.l - 1 if b is None else b
    first, last = _spans(sl)
    members = sl.vertices(a, b)
    if not members:
        return []
    lo = min(last[v] for v in members)
    hi = max(first[v] for v in members)
    return [i for i in range(a, b + 1) if lo < i < hi]


def minimal_cutset_slices(g, sl):
    """Indices whose slice is an inclusion-minimal cut-set of ``g``.

    Every cut-point slice is a cut-set, every separating slice contains one,
    and every minimal cut-set is a slice, so a cut-point slice is minimal iff no
    other cut-point slice is a proper subset of it.
    """
    if sl.l == 0:
        return []
    cuts = cut_point_indices(sl)
    sets = [sl.slices[i] for i in cuts]
    return [i for i in cuts if not any(s < sl.slices[i] for s in sets)]


def domination_greedy_interval(g, sub, sl):
    """Minimum dominating set of interval subgraph ``sub = (a, b)``, chosen inside it.

    Take the undominated vertex whose interval ends first and add its closed
    neighbour (within the subgraph) whose interval reaches furthest right.
    """
    a, b = sub
    members = sl.vertices(a, b)
    right = {v: sl.rep[v][1] for v in members}
    undominated = set(members)
    chosen = set()
    while undominated:
        u = min(undominated, key=lambda v: (right[v], v))
        cands = (g.neighbors(u) & members) | {u}
        pick = max(cands, key=lambda v: (right[v], -v))
        chosen.add(pick)
        undominated -= g.neighbors(pick) | {pick}
    return frozenset(chosen)


@dataclass(frozen=True)
class WideCertificate:
    a: int
    b: int
    value: int
    connectivity: int
    domination: int
    dominating_set: frozenset
    cut_slice: int | None

    def vertices(self, sl):
        return sl.vertices(self.a, self.b)


def interval_subgraph_wideness(g, sl, a, b):
    """Largest ``M`` with ``G[a, b]`` M-wide, by the cut-slice / greedy shortcut."""
    members = sl.vertices(a, b)
    cuts = cut_point_indices(sl, a, b)
    if cuts:
        cut = min(cuts, key=lambda i: (len(sl.slices[i]), i))
        conn = len(sl.slices[cut])
    else:
        cut = None
        conn = len(members) - 1
    conn = max(conn, 1)
    dom = domination_greedy_interval(g, (a, b), sl)
    return WideCertificate(a, b, min(conn, len(dom)), conn, len(dom), dom, cut)


def _require_connected_rep(g, rep):
    if not validate_representation(g, rep):
        raise InputError("interval representation does not match the graph")
    if not g.is_connected():
        raise InputError("w(G) is defined here for connected graphs only")


def compute_w(g, rep):
    """``w(G)`` with the certificate of a maximising interval subgraph."""
    _require_connected_rep(g, rep)
    sl = slice_sequence(rep)
    best = None
    for a in range(sl.l):
        for b in range(a, sl.l):
            cert = interval_subgraph_wideness(g, sl, a, b)
            if best is None or cert.value > best.value:
                best = cert
    return best.value, best


def three_approx_cop_number(g, rep):
    """``(w, 3w)``: the cop number lies in this range."""
    w, _ = compute_w(g, rep)
    return w, 3 * w


def sqrt_bound(n):
    return math.sqrt(5 * n) + 3


def sqrt_bound_check(g, rep):
    w, _ = compute_w(g, rep)
    return w <= sqrt_bound(g.n)


# -- file format -----------------------------------------------------------


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_intervals(rep):
    out = io.StringIO()
    out.write(f"{rep.n}\n")
    for lo, hi in rep.intervals:
        out.write(f"{_fmt(lo)} {_fmt(hi)}\n")
    return out.getvalue()


def parse_intervals(text):
    """``"n"`` then ``n`` lines ``"l r"``; decimals and ``p/q`` fractions both accepted."""
    lines = list(_data_lines(text))
    if not lines:
        raise InputError("empty interval file")
    try:
        n = int(lines[0])
        pairs = [tuple(Fraction(t) for t in line.split()) for line in lines[1:]]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed interval file: {exc}") from exc
    if len(pairs) != n or any(len(p) != 2 for p in pairs):
        raise InputError(f"interval file announces {n} intervals, found {len(pairs)}")
    return IntervalRepresentation(pairs)


def read_intervals(path):
    try:
        with open(path) as fh:
            return parse_intervals(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
