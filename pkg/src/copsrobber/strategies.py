"""Cop and robber policies for the arena.

Every policy is a small stateful object for one game.  Choices that the
underlying argument leaves open are resolved deterministically: smallest
vertex id, shortest path first.
"""

from __future__ import annotations

import random

from .decomposition import treewidth_exact, validate_tree_decomposition
from .errors import ConfigurationError, InputError, InternalError
from .game import INF, STATE_BUDGET, solve_fixed_k, solve_restricted
from .generators import ProductSpec, cartesian_product, theta_family
from .graph import greedy_dominating_set, minimum_dominating_set
from .interval import (compute_w, cut_point_indices, domination_greedy_interval, slice_sequence,
                       validate_representation)
from .wide import is_k_wide

__all__ = [
    "assign_moves", "OptimalCops", "OptimalRobber", "DominationCops", "GreedyCops", "RandomCops",
    "RandomRobber", "FarthestRobber", "SweepCops", "IntervalThreeTeamCops", "ProductLiftCops",
    "WideEvader", "ThetaEvader", "AccessibleEvader", "cop_sweep_decomposition",
    "cop_interval_three_team", "cop_product_lift", "robber_wide_evader", "robber_theta_evader",
    "robber_accessible_evader", "is_k_wide",
]


def assign_moves(g, cops, target):
    """Order the multiset ``target`` so cop ``i`` ends next to (or on) ``cops[i]``."""
    target = list(target)
    match = [None] * len(target)  # target slot -> cop index

    def augment(i, seen):
        for s, t in enumerate(target):
            if s in seen or not (t == cops[i] or g.has_edge(cops[i], t)):
                continue
            seen.add(s)
            if match[s] is None or augment(match[s], seen):
                match[s] = i
                return True
        return False

    for i in range(len(cops)):
        if not augment(i, set()):
            raise InternalError(f"no legal assignment from {cops} to {tuple(target)}")
    out = [None] * len(cops)
    for s, i in enumerate(match):
        out[i] = target[s]
    return tuple(out)


def _step_toward(g, dist_to_target, c):
    """Neighbour of ``c`` (or ``c``) closest to the target, smallest id on ties."""
    options = sorted(g.neighbors(c) | {c})
    return min(options, key=lambda u: (dist_to_target.get(u, INF), u))


def _capture_move(g, cops, robber):
    for i, c in enumerate(cops):
        if c == robber or g.has_edge(c, robber):
            out = list(cops)
            out[i] = robber
            return tuple(out)
    return None


_SOLVED = {}


def _solution(g, k, budget):
    key = (g, k)
    if key not in _SOLVED:
        _SOLVED[key] = solve_fixed_k(g, k, budget)
    return _SOLVED[key]


# -- solver-backed and baseline policies ----------------------------------


class OptimalCops:
    name = "optimal"

    def __init__(self, budget=STATE_BUDGET):
        self.budget = budget

    def place(self, g, k):
        self.sol = _solution(g, k, self.budget)
        return self.sol.cop_placement()

    def move(self, g, cops, robber):
        return assign_moves(g, cops, self.sol.cop_move(cops, robber))


class OptimalRobber:
    name = "optimal"

    def __init__(self, budget=STATE_BUDGET):
        self.budget = budget

    def place(self, g, cops):
        self.sol = _solution(g, len(cops), self.budget)
        return self.sol.robber_placement(cops)

    def move(self, g, cops, robber):
        return self.sol.robber_move(cops, robber)


class DominationCops:
    """Cops on a minimum dominating set; the cop next to the robber takes her."""

    name = "domination"

    def place(self, g, k):
        dom = sorted(minimum_dominating_set(g))
        if k < len(dom):
            raise ConfigurationError(f"domination policy needs {len(dom)} cops, got {k}")
        return tuple(dom + [dom[-1]] * (k - len(dom)))

    def move(self, g, cops, robber):
        return _capture_move(g, cops, robber) or tuple(cops)


class GreedyCops:
    """Every cop steps along a shortest path toward the robber."""

    name = "greedy"

    def place(self, g, k):
        dom = sorted(greedy_dominating_set(g)) or [0]
        return tuple(dom[i % len(dom)] for i in range(k))

    def move(self, g, cops, robber):
        hit = _capture_move(g, cops, robber)
        if hit:
            return hit
        dist = g.distances_from(robber)
        return tuple(_step_toward(g, dist, c) for c in cops)


class RandomCops:
    name = "random"

    def __init__(self, seed=0):
        self.rng = random.Random(seed)

    def place(self, g, k):
        return tuple(self.rng.randrange(g.n) for _ in range(k))

    def move(self, g, cops, robber):
        return tuple(self.rng.choice(sorted(g.neighbors(c) | {c})) for c in cops)


class RandomRobber:
    name = "random"

    def __init__(self, seed=0):
        self.rng = random.Random(seed)

    def place(self, g, cops):
        return self.rng.choice([v for v in range(g.n) if v not in cops])

    def move(self, g, cops, robber):
        return self.rng.choice(sorted(g.distances_from(robber, frozenset(cops))))


def _nearest_cop(g, cops):
    """Distance from every vertex to the closest cop (``INF`` when unreachable)."""
    best = {}
    for c in set(cops):
        for v, d in g.distances_from(c).items():
            if d < best.get(v, INF):
                best[v] = d
    return best


class FarthestRobber:
    """Run to the reachable vertex furthest from every cop."""

    name = "farthest"

    def _pick(self, g, cops, options):
        near = _nearest_cop(g, cops)
        return max(sorted(options), key=lambda v: (near.get(v, INF), -v))

    def place(self, g, cops):
        return self._pick(g, cops, [v for v in range(g.n) if v not in cops])

    def move(self, g, cops, robber):
        return self._pick(g, cops, g.distances_from(robber, frozenset(cops)))


# -- tree decomposition sweep ---------------------------------------------


class SweepCops:
    """Hold one bag, then advance bag by bag toward the robber.

    While moving from bag ``t`` to its neighbour ``t2`` on the robber's side,
    the cops on ``W_t ∩ W_t2`` stay put and cut her off; the others walk one
    step per round along shortest paths to the rest of ``W_t2``.  A cop next
    to the robber always takes her.
    """

    name = "sweep"

    def __init__(self, td=None, root=0):
        self.td = td
        self.root = root

    def place(self, g, k):
        if self.td is None:
            _, self.td = treewidth_exact(g)
        elif not validate_tree_decomposition(g, self.td):
            raise InputError("tree decomposition is not valid for this graph")
        need = self.td.width + 1
        if k < need:
            raise ConfigurationError(f"sweep over a width-{self.td.width} decomposition needs {need} cops, got {k}")
        self.dist = g.all_pairs_distances()
        self.bag = self.root
        self.targets = None
        bag = sorted(self.td.bags[self.root])
        return tuple(bag[i] if i < len(bag) else bag[0] for i in range(k))

    def _next_bag(self, robber):
        td = self.td
        for t2 in sorted(td.tree.neighbors(self.bag)):
            _, u2, _ = td.split(self.bag, t2)
            if robber in u2 and robber not in td.bags[self.bag]:
                return t2
        raise InternalError(f"robber at {robber} is in no branch around bag {self.bag}")

    def _plan(self, cops, t2):
        hold = self.td.bags[self.bag] & self.td.bags[t2]
        want = sorted(self.td.bags[t2] - hold)
        targets, kept = [], set()
        free = []
        for i, c in enumerate(cops):
            if c in hold and c not in kept:
                kept.add(c)
                targets.append(c)
            else:
                targets.append(None)
                free.append(i)
        fill = want + [min(self.td.bags[t2])] * len(free)
        for i, v in zip(free, fill):
            targets[i] = v
        return tuple(targets)

    def move(self, g, cops, robber):
        hit = _capture_move(g, cops, robber)
        if hit:
            return hit
        if self.targets is not None and tuple(cops) == self.targets:
            self.bag, self.targets = self.next, None
        if self.targets is None:
            self.next = self._next_bag(robber)
            self.targets = self._plan(cops, self.next)
        return tuple(_step_toward(g, self.dist[t], c) for c, t in zip(cops, self.targets))


def cop_sweep_decomposition(td=None):
    return SweepCops(td)


# -- interval graphs: three teams -----------------------------------------


class IntervalThreeTeamCops:
    """Three teams of ``w`` cops on an interval graph.

    Two teams sit on slices ``i1 < i2`` that fence the robber in; the free
    team walks onto a small dominating set of the slices strictly between
    them (preferred) or onto a small cut slice ``i3``, after which the team on
    the far side of ``i3`` is released.
    """

    name = "three-team"

    def __init__(self, rep, w=None):
        self.rep = rep
        self.w = w

    def place(self, g, k):
        if not validate_representation(g, self.rep):
            raise InputError("interval representation does not match the graph")
        if self.w is None:
            self.w, _ = compute_w(g, self.rep)
        w = self.w
        if k < 3 * w:
            raise ConfigurationError(f"three-team policy needs 3*w = {3 * w} cops, got {k}")
        self.sl = slice_sequence(self.rep)
        self.dist = g.all_pairs_distances()
        l = self.sl.l
        self.teams = [list(range(0, w)), list(range(w, 2 * w)), list(range(2 * w, k))]
        self.ends = [0, l - 1]  # slices held by teams 0 and 1
        self.hold = [None, None]
        self.free = 2
        self.plan = None
        self.k = k
        pos = [0] * k
        for i in self.teams[0]:
            pos[i] = min(self.sl.slices[0])
        for i in self.teams[1]:
            pos[i] = min(self.sl.slices[l - 1])
        for i in self.teams[2]:
            pos[i] = min(self.sl.slices[0])
        return tuple(pos)

    def _choose(self, g):
        """Target ``(kind, vertices, slice)`` for the free team, or ``None`` if nothing lies between."""
        a, b = self.ends[0] + 1, self.ends[1] - 1
        if a > b:
            return None
        dom = domination_greedy_interval(g, (a, b), self.sl)
        if len(dom) <= self.w:
            return "dominate", sorted(dom), None
        cuts = [i for i in cut_point_indices(self.sl, a, b) if len(self.sl.slices[i]) <= self.w]
        if not cuts:
            raise InternalError(f"slices {a}..{b} are more than {self.w}-wide")
        i3 = min(cuts, key=lambda i: (len(self.sl.slices[i]), i))
        return "cut", sorted(self.sl.slices[i3]), i3

    def _assign(self, cops, team, verts):
        targets = list(cops)
        for n, i in enumerate(self.teams[team]):
            targets[i] = verts[n] if n < len(verts) else verts[0]
        return targets

    def move(self, g, cops, robber):
        hit = _capture_move(g, cops, robber)
        if hit:
            return hit
        if self.plan is not None and all(cops[i] == self.plan[1][i] for i in self.teams[self.free]):
            kind, _, i3 = self.plan[0]
            self.plan = None
            if kind == "cut":
                first, last = self.sl.span(robber)
                side = 1 if last < i3 else 0  # the team whose slice is released
                if first <= i3 <= last:
                    raise InternalError("robber sits on the held cut slice")
                self.teams[side], self.teams[self.free] = self.teams[self.free], self.teams[side]
                self.ends[side] = i3
        if self.plan is None:
            choice = self._choose(g)
            if choice is None:
                return tuple(cops)
            self.plan = (choice, self._assign(cops, self.free, choice[1]))
        targets = self.plan[1]
        out = list(cops)
        for i in self.teams[self.free]:
            out[i] = _step_toward(g, self.dist[targets[i]], cops[i])
        return tuple(out)


def cop_interval_three_team(rep, w=None):
    return IntervalThreeTeamCops(rep, w)


# -- products --------------------------------------------------------------


class ProductLiftCops:
    """Shadow a cop strategy on the first factor with whole fibres of real cops.

    A virtual cop on ``u`` is represented by real cops on every vertex whose
    first coordinate is ``u``; the virtual robber is the real robber's first
    coordinate.
    """

    name = "product-lift"

    def __init__(self, factor_policy, factors, factor_cops=None):
        self.spec = factors if isinstance(factors, ProductSpec) else ProductSpec(tuple(factors))
        self.factor_policy = factor_policy
        self.factor_cops = factor_cops

    def place(self, g, k):
        spec = self.spec
        if g != cartesian_product(spec):
            raise InputError("graph is not the Cartesian product of the given factors")
        g1 = spec.factors[0]
        self.fibre = spec.n // g1.n
        if self.factor_cops is None:
            if k % self.fibre:
                raise ConfigurationError(f"{k} cops do not split into fibres of {self.fibre}")
            self.factor_cops = k // self.fibre
        if k != self.factor_cops * self.fibre:
            raise ConfigurationError(f"lifting {self.factor_cops} factor cops needs {self.factor_cops * self.fibre} cops, got {k}")
        self.virtual = tuple(self.factor_policy.place(g1, self.factor_cops))
        return self._real()

    def _real(self):
        out = []
        for u in self.virtual:
            out.extend(u * self.fibre + y for y in range(self.fibre))
        return tuple(out)

    def move(self, g, cops, robber):
        r1 = self.spec.coords(robber)[0]
        self.virtual = tuple(self.factor_policy.move(self.spec.factors[0], self.virtual, r1))
        return self._real()


def cop_product_lift(factor_strategy, factors, factor_cops=None):
    return ProductLiftCops(factor_strategy, factors, factor_cops)


# -- robbers from lower-bound arguments -----------------------------------


class WideEvader:
    """Stay inside a k-wide subgraph on a vertex no cop is on or next to."""

    name = "wide-evader"

    def __init__(self, h, k, check=True):
        self.h = frozenset(h)
        self.k = k
        self.check = check

    def place(self, g, cops):
        if len(cops) > self.k - 1:
            raise ConfigurationError(f"wide evader handles at most {self.k - 1} cops, got {len(cops)}")
        if self.check and not is_k_wide(g, self.h, self.k):
            raise ConfigurationError(f"the given subgraph is not {self.k}-wide")
        self.blocked_outside = frozenset(range(g.n)) - self.h
        return self._pick(g, cops, self.h - set(cops))

    def _pick(self, g, cops, options):
        near = _nearest_cop(g, cops)
        free = [v for v in options if near.get(v, INF) > 1]
        if not free:
            raise InternalError("no uncontrolled vertex left in the wide subgraph")
        return max(sorted(free), key=lambda v: (near.get(v, INF), -v))

    def move(self, g, cops, robber):
        reach = g.distances_from(robber, frozenset(cops) | self.blocked_outside)
        return self._pick(g, cops, reach)


def robber_wide_evader(h, k):
    return WideEvader(h, k)


class ThetaEvader:
    """Keep to a hub that no cop is on or next to, switching along a cop-free path."""

    name = "theta-evader"

    def __init__(self, m):
        self.m = m

    def place(self, g, cops):
        if g != theta_family(self.m):
            raise InputError(f"graph is not the theta graph with m={self.m}")
        if len(cops) > self.m - 1:
            raise ConfigurationError(f"theta evader handles at most {self.m - 1} cops, got {len(cops)}")
        return self._free_hubs(g, cops)[0]

    def _free_hubs(self, g, cops):
        near = _nearest_cop(g, cops)
        return [h for h in range(self.m) if near.get(h, INF) > 1]

    def move(self, g, cops, robber):
        free = self._free_hubs(g, cops)
        if robber in free:
            return robber
        reach = g.distances_from(robber, frozenset(cops))
        for h in free:
            if h in reach:
                return h
        raise InternalError("no free hub reachable")


def robber_theta_evader(m):
    return ThetaEvader(m)


class _AccessibleGame:
    """Evasion strategy for ``|X| - 1`` cops on one accessible pair, recursively.

    Positions and cop multisets are in the pair's own vertex numbering.
    """

    def __init__(self, pair, budget):
        self.pair = pair
        sp = pair.split
        if sp is None:
            x = pair.x
            self.sol = solve_restricted(pair.graph, pair.size - 1, avoid=x | {pair.v}, access=x, budget=budget)
            if self.sol.cops_win:
                raise InternalError("base pair is not accessible")
            return
        self.half = pair.size // 2
        self.children = [_AccessibleGame(s, budget) for s in sp.sides]
        self.inverse = [{b: a for a, b in e.items()} for e in sp.embed]
        self.zones = [sp.zone(i) for i in range(2)]
        self.side = None

    def _virtual(self, cops, j):
        sub = self.pair.split.sides[j]
        out = []
        for c in cops:
            if c in self.inverse[j]:
                out.append(self.inverse[j][c])
            elif c in self.pair.split.u[j]:
                out.append(sub.v)
        if len(out) > sub.size - 1:
            raise InternalError("too many cops on the robber's side")
        return tuple(sorted(out + [sub.v] * (sub.size - 1 - len(out))))

    def _count(self, cops, j):
        return sum(c in self.zones[j] for c in cops)

    def _enter(self, cops, j):
        self.side = j
        local = self.children[j].place(self._virtual(cops, j))
        return self.pair.split.embed[j][local]

    def place(self, cops):
        if self.pair.split is None:
            r = self.sol.robber_placement(cops)
            if self.sol.value(cops, r) < INF:
                raise InternalError("base strategy has no safe start")
            return r
        j = 0 if self._count(cops, 0) < self.half else 1
        return self._enter(cops, j)

    def move(self, cops, robber):
        if self.pair.split is None:
            return self.sol.robber_move(cops, robber)
        j = self.side
        if self._count(cops, j) < self.half:
            local = self.children[j].move(self._virtual(cops, j), self.inverse[j][robber])
            return self.pair.split.embed[j][local]
        return self._enter(cops, 1 - j)


class AccessibleEvader:
    """Robber for the chordal accessible-pair graphs.

    She lives on one of the two glued halves, playing the half's own strategy
    (cops elsewhere count as sitting on the half's ``v``), and crosses over
    through ``U1, X, U2`` once too many cops crowd her half.
    """

    name = "accessible-evader"

    def __init__(self, pair, budget=STATE_BUDGET):
        self.pair = pair
        self.budget = budget

    def _pad(self, cops):
        return tuple(sorted(list(cops) + [self.pair.v] * (self.pair.size - 1 - len(cops))))

    def place(self, g, cops):
        if g != self.pair.graph:
            raise InputError("graph does not match the accessible-pair construction")
        if len(cops) > self.pair.size - 1:
            raise ConfigurationError(f"accessible evader handles at most {self.pair.size - 1} cops, got {len(cops)}")
        self.game = _AccessibleGame(self.pair, self.budget)
        return self.game.place(self._pad(cops))

    def move(self, g, cops, robber):
        return self.game.move(self._pad(cops), robber)


def robber_accessible_evader(construction, budget=STATE_BUDGET):
    return AccessibleEvader(construction, budget)
