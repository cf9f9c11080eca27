"""Lower and upper bounds on the cop number, collected into one checked bracket."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import ceil

from .decomposition import treewidth_exact, validate_tree_decomposition
from .errors import CapabilityError, InputError, InternalError
from .game import STATE_BUDGET, cop_number_exact, solve_fixed_k, state_estimate
from .generators import ProductSpec, cartesian_product, hypercube, hypercube_dominating_set
from .graph import DOMINATION_LIMIT, is_dominating, minimum_dominating_set
from .interval import compute_w, validate_representation
from .wide import WIDE_LIMIT, max_wide_subgraph


@dataclass
class BoundEntry:
    name: str
    kind: str  # "lower" or "upper"
    value: int | None
    provenance: str
    certificate: str = ""
    applicable: bool = True
    reason: str = ""


@dataclass
class BoundReport:
    n: int
    entries: list = field(default_factory=list)
    exact: int | None = None
    exact_note: str = ""

    def _values(self, kind):
        return [e.value for e in self.entries if e.applicable and e.kind == kind]

    @property
    def lo(self):
        return max(self._values("lower"), default=0)

    @property
    def hi(self):
        vals = self._values("upper")
        return min(vals) if vals else None

    @property
    def bracket(self):
        return self.lo, self.hi

    def as_dict(self):
        return {"n": self.n, "lo": self.lo, "hi": self.hi, "exact": self.exact,
                "exact_note": self.exact_note, "entries": [asdict(e) for e in self.entries]}


# -- individual bounds -----------------------------------------------------


def lower_bound_wide(g, rep=None, limit=WIDE_LIMIT):
    """Largest ``k`` with a k-wide subgraph: ``w(G)`` for interval input, exhaustive otherwise."""
    if rep is not None:
        w, cert = compute_w(g, rep)
        return w, cert
    k, witness = max_wide_subgraph(g, limit=limit)
    return k, witness


def bounds_treewidth(g, tw=None):
    """``(ceil((tw + 1) / (Δ + 1)), tw + 1)``."""
    if tw is None:
        tw, _ = treewidth_exact(g)
    return ceil((tw + 1) / (g.max_degree() + 1)), tw + 1


def upper_bound_domination(g, dominating_set=None, limit=DOMINATION_LIMIT):
    if dominating_set is not None:
        if not is_dominating(g, dominating_set):
            raise InputError("supplied set does not dominate the graph")
        return len(set(dominating_set))
    return len(minimum_dominating_set(g, limit=limit))


def upper_bound_product(spec, factor_cop_number):
    """``n * c(G1) / n1`` rounded up."""
    n1 = spec.factors[0].n
    return ceil(spec.n * factor_cop_number / n1)


@dataclass(frozen=True)
class HypercubeBracket:
    m: int
    lower_formula: str
    upper_formula: str
    lower: int
    upper: int
    treewidth: int | None


HYPERCUBE_TW_EXACT = 4


def hypercube_bracket(m):
    """Finite bounds for the m-cube: treewidth/degree below, Hamming-code domination above."""
    if m < 1:
        raise InputError("hypercube dimension must be >= 1")
    upper = len(hypercube_dominating_set(m))
    upper_formula = "|hypercube_dominating_set(m)|"
    if m <= HYPERCUBE_TW_EXACT:
        tw, _ = treewidth_exact(hypercube(m))
        return HypercubeBracket(m, "ceil((tw + 1) / (m + 1))", upper_formula, ceil((tw + 1) / (m + 1)), upper, tw)
    return HypercubeBracket(m, "1 (treewidth not computed above m = 4)", upper_formula, 1, upper, None)


# -- composition -----------------------------------------------------------


def _try(entry_args, fn):
    name, kind, provenance = entry_args
    try:
        value, cert = fn()
        return BoundEntry(name, kind, value, provenance, cert)
    except CapabilityError as exc:
        return BoundEntry(name, kind, None, provenance, applicable=False, reason=str(exc))


def _na(name, kind, provenance, reason):
    return BoundEntry(name, kind, None, provenance, applicable=False, reason=reason)


def compose(g, rep=None, product=None, factor_cop_number=None, td=None, dominating_set=None,
            budget=STATE_BUDGET, exact=True):
    """Run every applicable bound, then (within budget) check the bracket against the exact value."""
    report = BoundReport(g.n)
    add = report.entries.append
    if g.n == 0:
        raise InputError("bounds need a non-empty graph")
    if not g.is_connected():
        raise InputError("bounds need a connected graph")

    add(BoundEntry("one-cop", "lower", 1, "some cop is always needed on a non-empty graph"))

    def wide():
        k, witness = max_wide_subgraph(g)
        return k, "H=" + ",".join(map(str, sorted(witness)))

    add(_try(("wide-subgraph", "lower", "a k-wide induced subgraph lets the robber beat k-1 cops"), wide))

    w = None
    if rep is not None:
        if not validate_representation(g, rep):
            raise InputError("interval representation does not match the graph")
        w, cert = compute_w(g, rep)
        add(BoundEntry("interval-w", "lower", w, "w(G): widest interval subgraph",
                       f"slices [{cert.a},{cert.b}] connectivity={cert.connectivity} domination={cert.domination}"))
    else:
        add(_na("interval-w", "lower", "w(G): widest interval subgraph", "no interval representation given"))

    tw = None
    try:
        tw, _ = treewidth_exact(g)
    except CapabilityError as exc:
        tw_reason = str(exc)
    if tw is not None:
        lo, hi = bounds_treewidth(g, tw)
        add(BoundEntry("treewidth-degree", "lower", lo, "(tw+1)/(max degree+1), rounded up",
                       f"tw={tw} maxdeg={g.max_degree()}"))
        add(BoundEntry("treewidth", "upper", hi, "tw+1 cops sweep a tree decomposition", f"tw={tw}"))
    else:
        add(_na("treewidth-degree", "lower", "(tw+1)/(max degree+1), rounded up", tw_reason))
        if td is not None and validate_tree_decomposition(g, td):
            add(BoundEntry("treewidth", "upper", td.width + 1, "width+1 cops sweep the given decomposition",
                           f"width={td.width}"))
        else:
            add(_na("treewidth", "upper", "tw+1 cops sweep a tree decomposition", tw_reason))

    def dom():
        if dominating_set is not None:
            size = upper_bound_domination(g, dominating_set)
            return size, "D=" + ",".join(map(str, sorted(dominating_set)))
        d = minimum_dominating_set(g)
        return len(d), "D=" + ",".join(map(str, sorted(d)))

    add(_try(("domination", "upper", "cops on a dominating set capture in one move"), dom))

    if w is not None:
        add(BoundEntry("interval-3w", "upper", 3 * w, "three teams of w(G) cops", f"w={w}"))
    else:
        add(_na("interval-3w", "upper", "three teams of w(G) cops", "no interval representation given"))

    if product is not None:
        spec = product if isinstance(product, ProductSpec) else ProductSpec(tuple(product))
        if g != cartesian_product(spec):
            raise InputError("graph is not the Cartesian product of the given factors")
        try:
            c1 = factor_cop_number if factor_cop_number is not None else cop_number_exact(spec.factors[0], budget).cop_number
            add(BoundEntry("product-lift", "upper", upper_bound_product(spec, c1),
                           "n*c(G1)/n1 cops shadow a strategy on the first factor",
                           f"n={spec.n} n1={spec.factors[0].n} c1={c1}"))
        except CapabilityError as exc:
            add(_na("product-lift", "upper", "n*c(G1)/n1 cops shadow a strategy on the first factor", str(exc)))
    else:
        add(_na("product-lift", "upper", "n*c(G1)/n1 cops shadow a strategy on the first factor",
                "no product structure given"))

    lo, hi = report.bracket
    if hi is not None and lo > hi:
        raise InternalError(f"contradictory bracket [{lo}, {hi}]")

    if exact:
        _attach_exact(g, report, budget)
    return report


def _attach_exact(g, report, budget):
    lo, hi = report.bracket
    top = hi if hi is not None else g.n
    if any(state_estimate(g.n, k) > budget for k in range(max(lo - 1, 1), top + 1)):
        report.exact_note = "exact solve skipped: state space over budget"
        return
    try:
        c = cop_number_exact(g, budget, start=lo).cop_number
        # the lower bound is not trusted blindly: one cop fewer must lose
        if lo >= 2 and solve_fixed_k(g, lo - 1, budget).cops_win:
            raise InternalError(f"cops win with {lo - 1} although the lower bound says {lo}")
    except CapabilityError as exc:
        report.exact_note = f"exact solve incomplete: {exc}"
        return
    report.exact = c
    report.exact_note = "solved"
    for e in report.entries:
        if not e.applicable:
            continue
        if (e.kind == "lower" and e.value > c) or (e.kind == "upper" and e.value < c):
            raise InternalError(f"bound {e.name}={e.value} ({e.kind}) contradicts exact cop number {c}")
