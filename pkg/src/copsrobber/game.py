"""Exact solver for Cops and Robber against a robber of unbounded speed.

The game graph has cop-to-move positions ``(C, r)`` for a sorted cop
multiset ``C`` and robber vertex ``r``.  A robber-to-move position only
matters through the robber's component of ``G - C``, so it is stored per
component.  Backward induction assigns every cop-to-move position the number
of rounds the cops need to force capture (``INF`` when they cannot):

* a component is worth the maximum over its vertices (the robber picks), and
* ``(C, r)`` is worth ``1 +`` the minimum over cop moves ``C'`` of either 0
  (a cop lands on ``r``) or the worth of ``r``'s component of ``G - C'``.

Iterating that update from ``INF`` everywhere converges to the least fixed
point, so positions outside it are exactly the robber wins.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

import numpy as np

from .errors import CapabilityError, InputError
from .graph import component_masks, greedy_dominating_set, to_mask

STATE_BUDGET = 5 * 10**7
INF = np.iinfo(np.int16).max


class Turn(enum.Enum):
    COPS = "cops"
    ROBBER = "robber"


@dataclass(frozen=True)
class GameState:
    cops: tuple
    robber: int
    turn: Turn

    def __post_init__(self):
        object.__setattr__(self, "cops", tuple(sorted(self.cops)))


# -- move generation -------------------------------------------------------


def robber_moves(g, s):
    """Every vertex the robber can end on: her component of ``g - cops``."""
    if s.turn is not Turn.ROBBER:
        raise InputError("robber_moves needs a robber-to-move state")
    blocked = set(s.cops)
    if s.robber in blocked:
        raise InputError("robber stands on a cop")
    return sorted(g.distances_from(s.robber, blocked))


def _group_options(g, cops):
    groups = []
    for c, grp in itertools.groupby(cops):
        mult = len(list(grp))
        opts = sorted(g.neighbors(c) | {c})
        groups.append(list(itertools.combinations_with_replacement(opts, mult)))
    return groups


def successor_multisets(g, cops):
    """All sorted cop multisets reachable when every cop stays or takes one edge."""
    out = set()
    for parts in itertools.product(*_group_options(g, cops)):
        out.add(tuple(sorted(itertools.chain.from_iterable(parts))))
    return sorted(out)


def cop_moves(g, s):
    if s.turn is not Turn.COPS:
        raise InputError("cop_moves needs a cop-to-move state")
    return successor_multisets(g, s.cops)


def state_estimate(n, k):
    return comb(n + k - 1, k) * n * 2


# -- fixed point -----------------------------------------------------------


class _GameGraph:
    """Precomputed move structure for ``k`` cops on ``g``."""

    def __init__(self, g, k, avoid_mask=0, access_mask=None):
        self.g = g
        self.k = k
        n = g.n
        self.multisets = list(itertools.combinations_with_replacement(range(n), k))
        index = {c: i for i, c in enumerate(self.multisets)}
        self.index = index
        m = len(self.multisets)

        self._build_layers()

        occupied = np.zeros((m, n), dtype=bool)
        comp_id = np.full((m, n), -1, dtype=np.int64)
        sizes, access = [], []
        cid = 0
        for i, c in enumerate(self.multisets):
            occupied[i, list(c)] = True
            for comp in component_masks(g, to_mask(c)):
                members = [v for v in range(n) if comp >> v & 1]
                comp_id[i, members] = cid
                sizes.append(len(members))
                access.append(access_mask is None or bool(comp & access_mask))
                cid += 1
        self.occupied = occupied
        self.comp_id = comp_id
        self.comp_size = np.asarray(sizes, dtype=np.int64)
        self.comp_access = np.asarray(access, dtype=bool)
        self.n_comps = cid

        avoid = np.zeros(n, dtype=bool)
        avoid[[v for v in range(n) if avoid_mask >> v & 1]] = True
        self.avoid = avoid
        # robber may stand on (C, r) exactly when r is free and not avoided
        self.standable = (comp_id >= 0) & ~avoid[None, :]
        flat = np.flatnonzero(self.standable.ravel())
        keys = comp_id.ravel()[flat]
        order = np.argsort(keys, kind="stable")
        self._member_flat = flat[order]
        seg_keys = keys[order]
        self._seg_starts = np.flatnonzero(np.r_[True, seg_keys[1:] != seg_keys[:-1]]) if len(seg_keys) else np.zeros(0, dtype=np.int64)
        self._seg_comp = seg_keys[self._seg_starts] if len(seg_keys) else np.zeros(0, dtype=np.int64)

    def good(self, worth):
        """Worth of each (C', r) right after the cops moved to C'."""
        comp_val = np.zeros(max(self.n_comps, 1), dtype=np.int16)
        if len(self._member_flat):
            vals = worth.ravel()[self._member_flat]
            comp_val[self._seg_comp] = np.maximum.reduceat(vals, self._seg_starts)
        comp_val[~self.comp_access] = 0
        out = np.where(self.comp_id >= 0, comp_val[np.maximum(self.comp_id, 0)], 0).astype(np.int16)
        out[self.occupied] = 0
        return out

    def _build_layers(self):
        # Cops move one at a time: layer j holds (moved multiset M, unmoved
        # multiset U) with |M| = j, and the smallest unmoved cop moves next.
        # Multisets of each size are numbered by colex rank.
        g, k, n = self.g, self.k, self.g.n
        binom = np.zeros((n + k + 1, k + 2), dtype=np.int64)
        for x in range(n + k + 1):
            for y in range(min(x, k + 1) + 1):
                binom[x, y] = comb(x, y)
        self._binom = binom
        tables = [self._colex_table(s) for s in range(k + 1)]
        lex = np.asarray(self.multisets, dtype=np.int64).reshape(len(self.multisets), k)
        self.lex_to_colex = self._rank(lex)
        self.colex_to_lex = np.argsort(self.lex_to_colex)
        deg = max((len(g.neighbors(v)) for v in range(n)), default=0) + 1
        opts = np.empty((n, deg), dtype=np.int64)
        for v in range(n):
            row = sorted(g.neighbors(v) | {v})
            opts[v] = row + [row[0]] * (deg - len(row))
        self.layers = []
        for j in range(k):
            moved, unmoved = tables[j], tables[k - j]
            m_rep = np.repeat(moved, len(unmoved), axis=0)
            u_rep = np.tile(unmoved, (len(moved), 1))
            rest_rank = self._rank(u_rep[:, 1:])
            n_rest = comb(n + k - j - 2, k - j - 1)
            trans = np.empty((len(m_rep), deg), dtype=np.int64)
            for d in range(deg):
                grown = np.sort(np.concatenate([m_rep, opts[u_rep[:, 0], d][:, None]], axis=1), axis=1)
                trans[:, d] = self._rank(grown) * n_rest + rest_rank
            self.layers.append(trans)

    def _rank(self, rows):
        """Colex rank of each sorted row (a multiset) among multisets of its size."""
        out = np.zeros(len(rows), dtype=np.int64)
        for i in range(rows.shape[1]):
            out += self._binom[rows[:, i] + i, i + 1]
        return out

    def _colex_table(self, s):
        combos = list(itertools.combinations_with_replacement(range(self.g.n), s))
        rows = np.asarray(combos, dtype=np.int64).reshape(len(combos), s)
        out = np.empty_like(rows)
        out[self._rank(rows)] = rows
        return out

    def step(self, good):
        h = good[self.colex_to_lex]
        for trans in reversed(self.layers):
            nxt = h[trans[:, 0]]
            for d in range(1, trans.shape[1]):
                np.minimum(nxt, h[trans[:, d]], out=nxt)
            h = nxt
        best = h[self.lex_to_colex]
        return np.where(best >= INF, INF, best + 1).astype(np.int16)


@dataclass
class FixedKSolution:
    """Solved game for a fixed number of cops, with positional strategies.

    ``worth[i, r]`` is the number of rounds the cops need from the cop-to-move
    position ``(multisets[i], r)``; ``INF`` marks robber wins.
    """

    g: object
    k: int
    worth: np.ndarray = field(repr=False)
    good: np.ndarray = field(repr=False)
    iterations: int
    _gg: _GameGraph = field(repr=False)

    @property
    def multisets(self):
        return self._gg.multisets

    def _idx(self, cops):
        try:
            return self._gg.index[tuple(sorted(cops))]
        except KeyError:
            raise InputError(f"{cops!r} is not a multiset of {self.k} vertices") from None

    def placement_value(self, cops):
        i = self._idx(cops)
        options = self.robber_placements(cops)
        if not options:
            return 0
        return int(max(self.worth[i, r] for r in options))

    def robber_placements(self, cops):
        i = self._idx(cops)
        gg = self._gg
        return [r for r in range(self.g.n) if gg.standable[i, r] and gg.comp_access[gg.comp_id[i, r]]]

    @cached_property
    def _placement(self):
        best, best_val = None, None
        for c in self._gg.multisets:
            val = self.placement_value(c)
            if best_val is None or val < best_val:
                best, best_val = c, val
                if val == 0:
                    break
        return best, best_val

    @property
    def cops_win(self):
        return self._placement[1] < INF

    @property
    def winner(self):
        return "cops" if self.cops_win else "robber"

    @property
    def capture_rounds(self):
        """Rounds the cops need under optimal play, or ``None`` for a robber win."""
        val = self._placement[1]
        return int(val) if val < INF else None

    def cop_placement(self):
        return self._placement[0]

    def robber_placement(self, cops):
        i = self._idx(cops)
        options = self.robber_placements(cops)
        if not options:
            raise InputError("no vertex left for the robber")
        return max(options, key=lambda r: (self.worth[i, r], -r))

    def value(self, cops, robber):
        return int(self.worth[self._idx(cops), robber])

    def cop_move(self, cops, robber):
        """Optimal next multiset; on robber-win positions, shrink her component."""
        self._idx(cops)
        gg = self._gg
        succ = np.asarray([gg.index[c] for c in successor_multisets(self.g, tuple(sorted(cops)))])
        vals = self.good[succ, robber]
        target = vals.min()
        cands = succ[vals == target]
        if target >= INF:
            sizes = gg.comp_size[gg.comp_id[cands, robber]]
            cands = cands[sizes == sizes.min()]
        return gg.multisets[int(cands.min())]

    def robber_move(self, cops, robber):
        """Optimal destination after the cops moved to ``cops``; stays on ties."""
        i = self._idx(cops)
        gg = self._gg
        cid = gg.comp_id[i, robber]
        if cid < 0:
            raise InputError("robber is standing on a cop")
        members = [r for r in range(self.g.n) if gg.comp_id[i, r] == cid and gg.standable[i, r]]
        best = max(self.worth[i, r] for r in members)
        if self.worth[i, robber] == best and gg.standable[i, robber]:
            return robber
        return min(r for r in members if self.worth[i, r] == best)

    @cached_property
    def cop_strategy(self):
        """Chosen cop move for every cop-win, cop-to-move state."""
        out = {}
        for i, c in enumerate(self._gg.multisets):
            for r in range(self.g.n):
                if self._gg.standable[i, r] and self.worth[i, r] < INF:
                    out[GameState(c, r, Turn.COPS)] = self.cop_move(c, r)
        return out

    @cached_property
    def robber_strategy(self):
        """Chosen robber destination for every robber-win, robber-to-move state."""
        out = {}
        for i, c in enumerate(self._gg.multisets):
            for r in range(self.g.n):
                if self._gg.standable[i, r] and self.good[i, r] >= INF:
                    out[GameState(c, r, Turn.ROBBER)] = self.robber_move(c, r)
        return out


def _solve(g, k, budget, avoid_mask=0, access_mask=None):
    if k < 0:
        raise InputError("cop count must be non-negative")
    est = state_estimate(g.n, k)
    if est > budget:
        raise CapabilityError(f"state space estimate {est} exceeds budget {budget} (n={g.n}, k={k})")
    gg = _GameGraph(g, k, avoid_mask, access_mask)
    worth = np.full((len(gg.multisets), g.n), INF, dtype=np.int16)
    worth[gg.occupied] = 0
    iterations = 0
    while True:
        good = gg.good(worth)
        new = gg.step(good)
        new[gg.occupied] = 0
        iterations += 1
        if np.array_equal(new, worth):
            break
        worth = new
    return FixedKSolution(g, k, worth, good, iterations, gg)


def solve_fixed_k(g, k, budget=STATE_BUDGET):
    """Solve the game for exactly ``k`` cops."""
    return _solve(g, k, budget)


def solve_restricted(g, k, avoid=(), access=None, budget=STATE_BUDGET):
    """Variant where the robber may never end a move in ``avoid`` and must keep
    a cop-free path to ``access`` after every cop move (losing it counts as a
    cop win)."""
    access_mask = None if access is None else to_mask(access)
    return _solve(g, k, budget, to_mask(avoid), access_mask)


@dataclass
class SolveResult:
    cop_number: int
    verdicts: dict
    solutions: dict = field(repr=False)

    @property
    def cop_strategy(self):
        return self.solutions[self.cop_number].cop_strategy

    @property
    def robber_strategy(self):
        """Robber strategy against one cop fewer than needed (empty when c = 0)."""
        sol = self.solutions.get(self.cop_number - 1)
        return sol.robber_strategy if sol is not None else {}


def cop_number_exact(g, budget=STATE_BUDGET, start=1):
    """Least ``k`` for which the cops win, trying ``k = start, start + 1, ...``.

    ``start`` must be a proven lower bound; the default 1 is valid for every
    non-empty graph.
    """
    if g.n == 0:
        return SolveResult(0, {0: "cops"}, {})
    verdicts, solutions = {}, {}
    k = max(start, 1)
    while True:
        try:
            sol = solve_fixed_k(g, k, budget)
        except CapabilityError as exc:
            upper = len(greedy_dominating_set(g))
            raise CapabilityError(f"{exc}; cop number lies in [{k}, {upper}]", bracket=(k, upper)) from exc
        verdicts[k] = sol.winner
        solutions[k] = sol
        if sol.cops_win:
            return SolveResult(k, verdicts, solutions)
        k += 1
