"""Command line: gen, solve, bounds, approx, play, verify."""

from __future__ import annotations

import argparse
import os
import re
import sys
import tempfile

from . import __version__
from .arena import DEFAULT_ROUNDS, play
from .bounds import compose
from .decomposition import format_decomposition, treewidth_exact
from .errors import CapabilityError, ConfigurationError, CopsRobberError, InputError, PolicyError
from .game import STATE_BUDGET, solve_fixed_k
from .generators import (ProductSpec, cartesian_product, chordal_accessible, grid, hypercube,
                         random_sparse_stripped, strong_product_path_clique, theta_family)
from .graph import complete_graph, cycle_graph, format_graph, greedy_dominating_set, path_graph, read_graph
from .interval import compute_w, format_intervals, read_intervals
from .strategies import (AccessibleEvader, DominationCops, FarthestRobber, GreedyCops,
                         IntervalThreeTeamCops, OptimalCops, OptimalRobber, ProductLiftCops, RandomCops,
                         RandomRobber, SweepCops, ThetaEvader, WideEvader)
from .verify import SUITES, run_suite
from .wide import max_wide_subgraph

SCHEMA_VERSION = 1


# -- output ----------------------------------------------------------------


def atomic_write(path, text):
    """Write via a temporary file in the same directory, then rename over ``path``."""
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (list, tuple, set, frozenset)):
        return ",".join(str(x) for x in (sorted(v) if isinstance(v, (set, frozenset)) else v))
    return str(v).replace("\n", " ")


def render(command, pairs, text_lines, fmt):
    """Text lines for humans, or a flat ``key=value`` document."""
    if fmt == "structured":
        out = [f"schema_version={SCHEMA_VERSION}", f"command={command}"]
        out += [f"{k}={_fmt_value(v)}" for k, v in pairs]
        return "\n".join(out) + "\n"
    return "\n".join(text_lines) + "\n"


def emit(args, command, pairs, text_lines):
    doc = render(command, pairs, text_lines, args.format)
    if args.output:
        atomic_write(args.output, doc)
    else:
        sys.stdout.write(doc)


# -- parsing helpers -------------------------------------------------------

_FACTOR = re.compile(r"^([KPC])(\d+)$")


def parse_factor(token):
    m = _FACTOR.match(token.strip())
    if not m:
        raise InputError(f"unknown factor {token!r}; use K<n>, P<n> or C<n>")
    kind, n = m.group(1), int(m.group(2))
    if n < 1 or (kind == "C" and n < 3):
        raise InputError(f"bad factor size in {token!r}")
    return {"K": complete_graph, "P": path_graph, "C": cycle_graph}[kind](n)


def parse_product(text):
    """``"K2xK2xK2"`` style product of named factors."""
    return ProductSpec(tuple(parse_factor(t) for t in text.split("x")))


def _int(value, name, minimum=None):
    try:
        out = int(value)
    except (TypeError, ValueError):
        raise InputError(f"{name} must be an integer, got {value!r}") from None
    if minimum is not None and out < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {out}")
    return out


# -- gen -------------------------------------------------------------------

FAMILIES = ("theta", "chordal-accessible", "hypercube", "grid", "product", "strong-product",
            "random-sparse", "complete", "path", "cycle")


def cmd_gen(args):
    fam, params = args.family, args.params
    side = {}
    info = [("family", fam)]

    def one(name):
        if len(params) != 1:
            raise InputError(f"gen {fam} takes exactly one parameter ({name})")
        info.append((name, params[0]))
        return params[0]

    if fam == "theta":
        g = theta_family(_int(one("m"), "m"))
    elif fam == "chordal-accessible":
        pair = chordal_accessible(_int(one("m"), "m"))
        g = pair.graph
        side["pair"] = pair.annotation() + "\n"
    elif fam == "hypercube":
        g = hypercube(_int(one("m"), "m"))
    elif fam == "grid":
        g = grid(_int(one("r"), "r", 1))
    elif fam == "product":
        g = cartesian_product(parse_product(one("factors")))
    elif fam == "strong-product":
        g, rep = strong_product_path_clique(_int(one("m"), "m"))
        side["intervals"] = format_intervals(rep)
    elif fam == "random-sparse":
        if args.seed is None:
            raise InputError("random-sparse needs --seed")
        n = _int(one("n"), "n", 1)
        g = random_sparse_stripped(n, args.seed, args.cap)
        info += [("seed", args.seed), ("cap", args.cap)]
    elif fam in ("complete", "path", "cycle"):
        n = _int(one("n"), "n", 1)
        g = {"complete": complete_graph, "path": path_graph, "cycle": cycle_graph}[fam](n)
    else:
        raise InputError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")

    comment = " ".join(f"{k}={v}" for k, v in info)
    graph_text = format_graph(g, comment=comment)
    if side and not args.out:
        raise InputError(f"gen {fam} writes side files; give -o PATH")
    if args.out:
        # everything is computed before the first write
        atomic_write(args.out, graph_text)
        for ext, text in side.items():
            atomic_write(f"{args.out}.{ext}", text)
    else:
        sys.stdout.write(graph_text)
    extra = [(k, v) for k, v in (("n", g.n), ("edges", g.edge_count)) if k not in dict(info)]
    pairs = info + extra + [(f"side_{ext}", f"{args.out}.{ext}") for ext in side]
    line = " ".join(f"{k}={v}" for k, v in info + extra)
    if args.out or args.format == "structured":
        doc = render("gen", pairs, [line], args.format)
        (sys.stdout if args.out else sys.stderr).write(doc)
    return 0


# -- solve -----------------------------------------------------------------


def cmd_solve(args):
    g = read_graph(args.graph)
    if not g.is_connected():
        raise InputError("the game is played on connected graphs")
    verdicts = {}
    cop_number, bracket, reason = None, None, ""
    upper = len(greedy_dominating_set(g))
    k = 1
    while True:
        if args.max_k is not None and k > args.max_k:
            bracket, reason = (k, upper), f"stopped at --max-k {args.max_k}"
            break
        try:
            sol = solve_fixed_k(g, k, args.budget)
        except CapabilityError as exc:
            bracket, reason = (k, upper), str(exc)
            break
        verdicts[k] = sol.winner
        if sol.cops_win:
            cop_number = k
            break
        k += 1
    pairs = [("n", g.n), ("edges", g.edge_count), ("resolved", cop_number is not None)]
    lines = [f"k={kk}: {v}" for kk, v in verdicts.items()]
    pairs += [(f"verdict_{kk}", v) for kk, v in verdicts.items()]
    if cop_number is not None:
        pairs.append(("c_inf", cop_number))
        lines.append(f"c_inf = {cop_number}")
    else:
        pairs += [("bracket_lo", bracket[0]), ("bracket_hi", bracket[1]), ("reason", reason)]
        lines.append(f"c_inf in [{bracket[0]}, {bracket[1]}] ({reason})")
    emit(args, "solve", pairs, lines)
    return 0 if cop_number is not None else 3


# -- bounds / approx -------------------------------------------------------


def cmd_bounds(args):
    g = read_graph(args.graph)
    rep = read_intervals(args.intervals) if args.intervals else None
    product = parse_product(args.product) if args.product else None
    report = compose(g, rep=rep, product=product, budget=args.budget, exact=not args.no_exact)
    lo, hi = report.bracket
    pairs = [("n", g.n), ("bracket_lo", lo), ("bracket_hi", hi), ("exact", report.exact),
             ("exact_note", report.exact_note)]
    lines = []
    for e in report.entries:
        p = f"entry_{e.name}"
        pairs += [(f"{p}_kind", e.kind), (f"{p}_applicable", e.applicable)]
        if e.applicable:
            pairs += [(f"{p}_value", e.value), (f"{p}_certificate", e.certificate)]
            lines.append(f"{e.kind:5} {e.name} = {e.value}  [{e.provenance}] {e.certificate}".rstrip())
        else:
            pairs.append((f"{p}_reason", e.reason))
            lines.append(f"{e.kind:5} {e.name}: n/a ({e.reason})")
        pairs.append((f"{p}_provenance", e.provenance))
    lines.append(f"bracket = ({lo}, {hi})")
    if report.exact is not None:
        lines.append(f"exact c_inf = {report.exact}")
    elif report.exact_note:
        lines.append(report.exact_note)
    emit(args, "bounds", pairs, lines)
    return 0


def cmd_approx(args):
    g = read_graph(args.graph)
    rep = read_intervals(args.intervals)
    w, cert = compute_w(g, rep)
    pairs = [("n", g.n), ("w", w), ("lower", w), ("upper", 3 * w), ("slice_a", cert.a), ("slice_b", cert.b),
             ("connectivity", cert.connectivity), ("domination", cert.domination),
             ("dominating_set", sorted(cert.dominating_set)), ("cut_slice", cert.cut_slice)]
    lines = [f"w(G) = {w}", f"c_inf in [{w}, {3 * w}]",
             f"witness slices [{cert.a}, {cert.b}]: connectivity {cert.connectivity}, domination {cert.domination}"]
    emit(args, "approx", pairs, lines)
    return 0


# -- play ------------------------------------------------------------------

COP_POLICIES = ("optimal", "domination", "greedy", "random", "sweep", "three-team", "product-lift")
ROBBER_POLICIES = ("optimal", "random", "farthest", "wide-evader", "theta-evader", "accessible-evader")


def _theta_m(g):
    for m in range(3, 12):
        if theta_family(m).n == g.n:
            if theta_family(m) == g:
                return m
            break
    raise InputError("theta-evader needs a graph produced by 'gen theta'")


def _accessible_pair(g):
    m = 2
    while m <= 64:
        pair = chordal_accessible(m)
        if pair.graph.n == g.n and pair.graph == g:
            return pair
        if pair.graph.n > g.n:
            break
        m *= 2
    raise InputError("accessible-evader needs a graph produced by 'gen chordal-accessible'")


def build_cop_policy(name, g, args):
    if name == "optimal":
        return OptimalCops(args.budget)
    if name == "domination":
        return DominationCops()
    if name == "greedy":
        return GreedyCops()
    if name == "random":
        return RandomCops(args.seed or 0)
    if name == "sweep":
        return SweepCops()
    if name == "three-team":
        if not args.intervals:
            raise ConfigurationError("three-team needs --intervals")
        return IntervalThreeTeamCops(read_intervals(args.intervals))
    if name == "product-lift":
        if not args.product:
            raise ConfigurationError("product-lift needs --product")
        return ProductLiftCops(OptimalCops(args.budget), parse_product(args.product))
    raise InputError(f"unknown cop policy {name!r}; choose from {', '.join(COP_POLICIES)}")


def build_robber_policy(name, g, args):
    if name == "optimal":
        return OptimalRobber(args.budget)
    if name == "random":
        return RandomRobber(args.seed or 0)
    if name == "farthest":
        return FarthestRobber()
    if name == "wide-evader":
        k, h = max_wide_subgraph(g)
        return WideEvader(h, k)
    if name == "theta-evader":
        return ThetaEvader(_theta_m(g))
    if name == "accessible-evader":
        return AccessibleEvader(_accessible_pair(g), args.budget)
    raise InputError(f"unknown robber policy {name!r}; choose from {', '.join(ROBBER_POLICIES)}")


def cmd_play(args):
    g = read_graph(args.graph)
    if not g.is_connected():
        raise InputError("the game is played on connected graphs")
    if args.k < 1 or args.rounds < 1:
        raise InputError("--k and --rounds must be positive")
    cops = build_cop_policy(args.cops, g, args)
    robber = build_robber_policy(args.robber, g, args)
    tr = play(g, args.k, cops, robber, args.rounds)
    if args.transcript:
        atomic_write(args.transcript, tr.to_text())
    pairs = [("n", g.n), ("k", args.k), ("cops", args.cops), ("robber", args.robber),
             ("outcome", tr.outcome.kind), ("round", tr.outcome.round), ("plies", len(tr.plies))]
    if not args.transcript:
        pairs += [(f"ply_{i}", p.line()) for i, p in enumerate(tr.plies)]
    lines = [] if args.transcript else [p.line() for p in tr.plies]
    lines.append(f"outcome: {tr.outcome}")
    emit(args, "play", pairs, lines)
    return 0


# -- verify ----------------------------------------------------------------


def cmd_verify(args):
    checks = run_suite(args.suite, args.budget)
    failed = [c for c in checks if not c.ok]
    pairs = [("suite", args.suite), ("checks", len(checks)), ("failed", len(failed))]
    pairs += [(f"check_{i}", f"{'pass' if c.ok else 'fail'}|{c.name}|{c.detail}") for i, c in enumerate(checks)]
    lines = [c.line() for c in checks]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    emit(args, "verify", pairs, lines)
    return 1 if failed else 0


# -- entry point -----------------------------------------------------------


def _budget(text):
    value = int(float(text))
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--output", help="write the report to this file instead of stdout")
    common.add_argument("--budget", type=_budget, default=STATE_BUDGET, help="solver state budget")

    p = argparse.ArgumentParser(prog="copsrobber", description="Cops and an unbounded-speed robber.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="generate a graph family")
    s.add_argument("family", help=", ".join(FAMILIES))
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--out", help="graph file; side files get an extra suffix")
    s.add_argument("--seed", type=int)
    s.add_argument("--cap", type=int, default=6, help="degree cap for random-sparse")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="exact cop number")
    s.add_argument("graph")
    s.add_argument("--max-k", type=int)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("bounds", parents=[common], help="bracket the cop number")
    s.add_argument("graph")
    s.add_argument("--intervals")
    s.add_argument("--product", help="factor list such as K2xK2xK2")
    s.add_argument("--no-exact", action="store_true", help="skip the exact cross-check")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("approx", parents=[common], help="3-approximation on an interval graph")
    s.add_argument("graph")
    s.add_argument("--intervals", required=True)
    s.set_defaults(func=cmd_approx)

    s = sub.add_parser("play", parents=[common], help="play two policies against each other")
    s.add_argument("graph")
    s.add_argument("--cops", required=True, help=", ".join(COP_POLICIES))
    s.add_argument("--robber", required=True, help=", ".join(ROBBER_POLICIES))
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--rounds", type=int, default=DEFAULT_ROUNDS)
    s.add_argument("--seed", type=int)
    s.add_argument("--intervals")
    s.add_argument("--product")
    s.add_argument("--transcript", help="write the ply-by-ply transcript here")
    s.set_defaults(func=cmd_play)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", default="all", help=", ".join(SUITES))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("treewidth", parents=[common], help="exact treewidth and a witness decomposition")
    s.add_argument("graph")
    s.add_argument("--td", help="write the decomposition here")
    s.set_defaults(func=cmd_treewidth)
    return p


def cmd_treewidth(args):
    g = read_graph(args.graph)
    tw, td = treewidth_exact(g)
    if args.td:
        atomic_write(args.td, format_decomposition(td))
    emit(args, "treewidth", [("n", g.n), ("treewidth", tw), ("bags", len(td.bags))], [f"treewidth = {tw}"])
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "command", None) == "verify" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except PolicyError as exc:
        print(f"error: illegal move by policy {exc.offender}: {exc}", file=sys.stderr)
        return exc.exit_code
    except CopsRobberError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
