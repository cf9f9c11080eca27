"""Helicopter Cops and Robber (jump-searching) solved by fixed point.

Cops jump to any set ``X`` of at most ``k`` vertices; the robber answers with
an ``X``-flap (component of ``G - X``) touching her previous flap.  Whether a
flap is winning for the cops does not depend on where the cops currently sit,
so the state is the flap alone.  For a candidate jump ``X`` let ``U(X)`` be
the union of its flaps not yet known to be cop wins; flap ``R`` becomes a cop
win once some ``X`` has ``U(X)`` disjoint from the closed neighbourhood of
``R`` (no losing flap touches it).
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import CapabilityError
from .graph import closed_mask_of, component_masks

HELICOPTER_LIMIT = 10


def _jumps(g, k):
    out = []
    for size in range(min(k, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            out.append(m)
    return out


def cops_win_helicopter(g, k):
    """True when ``k`` helicopter cops can always eliminate the robber's flap."""
    jumps = _jumps(g, k)
    flaps_of = [component_masks(g, x) for x in jumps]
    states = sorted({f for fl in flaps_of for f in fl})
    if not states:
        return True
    pos = {f: i for i, f in enumerate(states)}
    closed = np.array([closed_mask_of(g, f) for f in states], dtype=np.int64)
    member = [np.array([pos[f] for f in fl], dtype=np.int64) for fl in flaps_of]
    flap_masks = [np.array(fl, dtype=np.int64) for fl in flaps_of]
    win = np.zeros(len(states), dtype=bool)
    while True:
        losing_union = np.array(
            [np.bitwise_or.reduce(fm[~win[mi]]) if len(fm) else 0 for fm, mi in zip(flap_masks, member)],
            dtype=np.int64,
        )
        new = ((closed[:, None] & losing_union[None, :]) == 0).any(axis=1)
        if np.array_equal(new, win):
            break
        win = new
    return bool((losing_union == 0).any())


def helicopter_min_cops(g, limit=HELICOPTER_LIMIT):
    """Least number of cops winning the jump-searching game."""
    if g.n > limit:
        raise CapabilityError(f"helicopter solver limited to {limit} vertices, graph has {g.n}")
    k = 0
    while not cops_win_helicopter(g, k):
        k += 1
    return k
