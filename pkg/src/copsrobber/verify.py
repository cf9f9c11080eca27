"""Verification suites run by ``copsrobber verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arena import play
from .corpus import connected_atlas, interval_corpus, named_instances
from .decomposition import is_chordal, treewidth_exact
from .game import STATE_BUDGET, cop_number_exact, solve_fixed_k, solve_restricted
from .generators import (ProductSpec, accessible_structure_violations, cartesian_product,
                         chordal_accessible, hypercube, hypercube_dominating_set,
                         strong_product_path_clique)
from .graph import (all_minimum_dominating_sets, complete_graph, component_masks, contract_edge,
                    domination_number_exact, is_dominating, to_mask)
from .helicopter import helicopter_min_cops
from .interval import compute_w, domination_greedy_interval, minimal_cutset_slices, slice_sequence, sqrt_bound
from .strategies import DominationCops, OptimalCops, OptimalRobber, ProductLiftCops

# exhaustive oracles are only run up to these sizes
CUTSET_N = 12
GREEDY_N = 14
DOMSET_N = 18

SUITES = ("interval", "chordal", "treewidth", "helicopter", "products", "contraction", "all")


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str

    def line(self):
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"


@lru_cache(maxsize=None)
def cop_number(g, budget=STATE_BUDGET):
    return cop_number_exact(g, budget).cop_number


def sandwich_corpus():
    return [(f"atlas#{i}", g) for i, g in enumerate(connected_atlas(7))] + list(named_instances(9))


# -- interval --------------------------------------------------------------


def minimal_cutsets_bruteforce(g):
    """All inclusion-minimal separating vertex sets, by subset enumeration."""
    full = 1 << g.n
    sep = [len(component_masks(g, s)) >= 2 for s in range(full)]
    # below[s]: some proper subset of s separates
    below = [False] * full
    for s in range(1, full):
        t = s
        while t:
            bit = t & -t
            r = s ^ bit
            if sep[r] or below[r]:
                below[s] = True
                break
            t ^= bit
    return {s for s in range(full) if sep[s] and not below[s]}


def check_interval(budget=STATE_BUDGET):
    out = []
    bad = []
    for name, g, rep in interval_corpus(12):
        w, _ = compute_w(g, rep)
        c = cop_number_exact(g, budget, start=w).cop_number
        if w > 1 and solve_fixed_k(g, w - 1, budget).cops_win:
            bad.append(f"{name}: cops win with w-1")
        if not w <= c <= 3 * w:
            bad.append(f"{name}: w={w} c={c}")
    out.append(Check("interval sandwich w <= c <= 3w", not bad, f"{len(interval_corpus(12))} graphs; " + ("; ".join(bad) or "no violations")))

    g, rep = strong_product_path_clique(2)
    w, _ = compute_w(g, rep)
    c = cop_number(g, budget)
    out.append(Check("strong product P6 x K2", w == 2 and c == 2, f"w={w} c={c}"))

    bad = []
    for name, g, rep in interval_corpus(12):
        if g.n > CUTSET_N:
            continue
        sl = slice_sequence(rep)
        got = {to_mask(sl.slices[i]) for i in minimal_cutset_slices(g, sl)}
        if got != minimal_cutsets_bruteforce(g):
            bad.append(name)
    out.append(Check("minimal cut-sets are slices", not bad, ", ".join(bad) or "all match enumeration"))

    bad = []
    for name, g, rep in interval_corpus(14):
        if g.n > GREEDY_N:
            continue
        sl = slice_sequence(rep)
        for a in range(sl.l):
            for b in range(a, sl.l):
                sub, _ = g.subgraph(sl.vertices(a, b))
                if len(domination_greedy_interval(g, (a, b), sl)) != domination_number_exact(sub):
                    bad.append(f"{name}[{a},{b}]")
    out.append(Check("greedy interval domination", not bad, ", ".join(bad[:5]) or "matches exhaustive search"))

    bad = []
    for name, g, rep in interval_corpus(12):
        if g.n > DOMSET_N:
            continue
        for dom in all_minimum_dominating_sets(g):
            for v in range(g.n):
                inside = len(g.neighbors(v) & dom)
                if (v in dom and inside > 2) or (v not in dom and inside > 5):
                    bad.append(f"{name} v={v}")
    out.append(Check("minimum dominating set neighbourhoods", not bad, ", ".join(bad[:5]) or "<= 2 inside, <= 5 outside"))

    bad = []
    for name, g, rep in interval_corpus(30):
        w, _ = compute_w(g, rep)
        if w > sqrt_bound(g.n):
            bad.append(f"{name}: w={w}")
    out.append(Check("w <= sqrt(5n) + 3", not bad, ", ".join(bad) or f"{len(interval_corpus(30))} graphs up to n=30"))
    return out


# -- chordal ---------------------------------------------------------------


def check_chordal(budget=STATE_BUDGET):
    out = []
    p2 = chordal_accessible(2)
    x, v = p2.x, p2.v
    restricted = solve_restricted(p2.graph, 1, avoid=x | {v}, access=x, budget=budget)
    ok = (p2.graph.n == 7 and is_chordal(p2.graph)[0] and p2.graph.neighbors(v) == x
          and not solve_fixed_k(p2.graph, 1, budget).cops_win and not restricted.cops_win)
    out.append(Check("accessible pair, |X| = 2", ok, f"n={p2.graph.n} X={sorted(x)} v={v}"))
    for m in (4, 8):
        p = chordal_accessible(m)
        viol = accessible_structure_violations(p)
        out.append(Check(f"accessible construction m={m}", is_chordal(p.graph)[0] and not viol,
                         f"n={p.graph.n} " + ("; ".join(viol) or "chordal, joins exact")))
    p4 = chordal_accessible(4)
    lose = not solve_fixed_k(p4.graph, 3, budget).cops_win
    out.append(Check("3 cops lose on the m=4 construction", lose and p4.graph.n == 25, f"n={p4.graph.n}"))
    return out


# -- treewidth and helicopter ---------------------------------------------


def check_treewidth(budget=STATE_BUDGET):
    bad = []
    corpus = sandwich_corpus()
    for name, g in corpus:
        tw, _ = treewidth_exact(g)
        c = cop_number(g, budget)
        lo = math.ceil((tw + 1) / (g.max_degree() + 1))
        if not lo <= c <= tw + 1:
            bad.append(f"{name}: {lo} <= {c} <= {tw + 1} fails")
    return [Check("treewidth sandwich", not bad, f"{len(corpus)} graphs; " + ("; ".join(bad) or "no violations"))]


def check_helicopter(budget=STATE_BUDGET):
    bad_id, bad_link = [], []
    corpus = [(n, g) for n, g in sandwich_corpus() if g.n <= 8]
    for name, g in corpus:
        h = helicopter_min_cops(g)
        tw, _ = treewidth_exact(g)
        if h != tw + 1:
            bad_id.append(f"{name}: {h} != {tw + 1}")
        if h > (g.max_degree() + 1) * cop_number(g, budget):
            bad_link.append(name)
    return [Check("helicopter = tw + 1", not bad_id, f"{len(corpus)} graphs; " + ("; ".join(bad_id) or "no violations")),
            Check("helicopter <= (maxdeg + 1) c", not bad_link, "; ".join(bad_link) or "no violations")]


# -- products --------------------------------------------------------------


def check_products(budget=STATE_BUDGET):
    out = []
    for m, size in ((3, 2), (4, 4), (7, 16)):
        d = hypercube_dominating_set(m)
        ok = len(d) == size and is_dominating(hypercube(m), d) and len(d) <= 2 ** (m + 1) / (m + 1)
        out.append(Check(f"hypercube dominating set m={m}", ok, f"size={len(d)}"))
    c3 = cop_number(hypercube(3), budget)
    out.append(Check("cop number of Q3", c3 == 2, f"c={c3}"))
    q4 = hypercube(4)
    lower_ok = not solve_fixed_k(q4, 1, budget).cops_win
    out.append(Check("Q4 bracket", lower_ok and len(hypercube_dominating_set(4)) <= 4,
                     "1 cop loses, 4 dominate"))
    for label, factors in (("K2xK2", [complete_graph(2)] * 2), ("K3xK3", [complete_graph(3)] * 2),
                           ("Q3", [complete_graph(2)] * 3)):
        spec = ProductSpec(tuple(factors))
        g = cartesian_product(spec)
        c1 = cop_number(factors[0], budget)
        k = g.n * c1 // factors[0].n
        tr = play(g, k, ProductLiftCops(DominationCops(), spec), OptimalRobber(budget))
        c = cop_number(g, budget)
        out.append(Check(f"lifted strategy on {label}", tr.captured and c <= k, f"{k} cops, {tr.outcome}, c={c}"))
    return out


# -- contraction -----------------------------------------------------------


def check_contraction(budget=STATE_BUDGET):
    bad = []
    count = 0
    for i, g in enumerate(connected_atlas(7)):
        c = cop_number(g, budget)
        for e in g.sorted_edges():
            count += 1
            if cop_number(contract_edge(g, e), budget) > c:
                bad.append(f"atlas#{i} edge {e}")
    return [Check("contraction never raises the cop number", not bad, f"{count} contractions; " + ("; ".join(bad[:5]) or "no violations"))]


RUNNERS = {"interval": check_interval, "chordal": check_chordal, "treewidth": check_treewidth,
           "helicopter": check_helicopter, "products": check_products, "contraction": check_contraction}


def run_suite(name, budget=STATE_BUDGET):
    if name == "all":
        return [c for key in RUNNERS for c in RUNNERS[key](budget)]
    return RUNNERS[name](budget)
