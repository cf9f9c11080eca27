"""Referee for games between a cop policy and a robber policy.

A cop policy provides ``place(g, k)`` and ``move(g, cops, robber)``, each
returning a tuple with one position per cop (cop ``i`` keeps index ``i``).
A robber policy provides ``place(g, cops)`` and ``move(g, cops, robber)``,
returning a vertex.  Round 0 is the placement; every later round is a cop
move followed by a robber move.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, PolicyError

DEFAULT_ROUNDS = 1000


@dataclass(frozen=True)
class Ply:
    round: int
    mover: str
    cops: tuple
    robber: int | None

    def line(self):
        robber = "-" if self.robber is None else str(self.robber)
        return f"{self.round}; {self.mover}; cops=[{','.join(map(str, self.cops))}]; robber={robber}"


@dataclass(frozen=True)
class Outcome:
    kind: str  # "capture" or "survived"
    round: int

    @property
    def captured(self):
        return self.kind == "capture"

    def __str__(self):
        return f"{'Capture' if self.captured else 'Survived'}({self.round})"


@dataclass
class Transcript:
    k: int
    cop_policy: str
    robber_policy: str
    plies: list = field(default_factory=list)
    outcome: Outcome | None = None

    @property
    def captured(self):
        return self.outcome is not None and self.outcome.captured

    def lines(self):
        out = [p.line() for p in self.plies]
        out.append(f"outcome: {self.outcome}")
        return out

    def to_text(self):
        return "\n".join(self.lines()) + "\n"


def policy_name(policy):
    return getattr(policy, "name", type(policy).__name__)


def parse_ply(line):
    """Inverse of ``Ply.line``."""
    try:
        rnd, mover, cops, robber = (part.strip() for part in line.split(";"))
        cops = cops.removeprefix("cops=[").removesuffix("]")
        robber = robber.removeprefix("robber=")
        return Ply(int(rnd), mover, tuple(int(c) for c in cops.split(",") if c),
                   None if robber == "-" else int(robber))
    except ValueError as exc:
        raise InputError(f"malformed transcript line {line!r}") from exc


def _check_cops(g, k, cops, prev, who, rnd):
    try:
        cops = tuple(int(c) for c in cops)
    except (TypeError, ValueError):
        raise PolicyError(f"{who} returned {cops!r} in round {rnd}", offender=who) from None
    if len(cops) != k:
        raise PolicyError(f"{who} returned {len(cops)} positions for {k} cops in round {rnd}", offender=who)
    for i, c in enumerate(cops):
        if not 0 <= c < g.n:
            raise PolicyError(f"{who} put cop {i} on missing vertex {c} in round {rnd}", offender=who)
        if prev is not None and c != prev[i] and not g.has_edge(prev[i], c):
            raise PolicyError(f"{who} moved cop {i} from {prev[i]} to non-adjacent {c} in round {rnd}", offender=who)
    return cops


def _check_robber(g, cops, target, prev, who, rnd):
    try:
        target = int(target)
    except (TypeError, ValueError):
        raise PolicyError(f"{who} returned {target!r} in round {rnd}", offender=who) from None
    if not 0 <= target < g.n:
        raise PolicyError(f"{who} chose missing vertex {target} in round {rnd}", offender=who)
    if target in cops:
        raise PolicyError(f"{who} moved onto cop-occupied vertex {target} in round {rnd}", offender=who)
    if prev is not None and target not in g.distances_from(prev, frozenset(cops)):
        raise PolicyError(f"{who} has no cop-free path from {prev} to {target} in round {rnd}", offender=who)
    return target


def play(g, k, cop_policy, robber_policy, max_rounds=DEFAULT_ROUNDS):
    """Run one game and return its transcript; illegal moves raise ``PolicyError``."""
    if k < 0 or max_rounds < 0:
        raise InputError("cop count and round limit must be non-negative")
    cname, rname = policy_name(cop_policy), policy_name(robber_policy)
    tr = Transcript(k, cname, rname)

    cops = _check_cops(g, k, cop_policy.place(g, k), None, cname, 0)
    tr.plies.append(Ply(0, "cops", cops, None))
    if len(set(cops)) >= g.n:
        tr.outcome = Outcome("capture", 0)
        return tr
    robber = _check_robber(g, cops, robber_policy.place(g, cops), None, rname, 0)
    tr.plies.append(Ply(0, "robber", cops, robber))

    for rnd in range(1, max_rounds + 1):
        cops = _check_cops(g, k, cop_policy.move(g, cops, robber), cops, cname, rnd)
        tr.plies.append(Ply(rnd, "cops", cops, robber))
        if robber in cops:
            tr.outcome = Outcome("capture", rnd)
            return tr
        robber = _check_robber(g, cops, robber_policy.move(g, cops, robber), robber, rname, rnd)
        tr.plies.append(Ply(rnd, "robber", cops, robber))
    tr.outcome = Outcome("survived", max_rounds)
    return tr
