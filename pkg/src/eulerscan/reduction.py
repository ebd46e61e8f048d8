"""Reducible points and poset reduction.

Beat points follow the upward convention used throughout this package:
x is a *down-beat* point when its strict up-set has a unique minimal
element, and an *up-beat* point dually (strict down-set with a unique
maximal element).  Several texts attach the names the other way around;
only internal consistency matters for the theorems exercised here.

The reducibility ladder is
down-beat  =>  weak down-beat (strict up-set contractible)  =>  chi-point
(strict up-set has Euler characteristic 1).  Removing beat points until
none remain yields the core, which is unique up to isomorphism; removing
chi-points yields a chi-minimal model, which is canonicalized here by
always removing the eligible element that comes first in a caller-chosen
total order (ascending ids by default).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .poset import Poset, _mobius_matrix

DOWN_BEAT = "down_beat"
UP_BEAT = "up_beat"
CHI_POINT = "chi_point"


@dataclass(frozen=True)
class PointClass:
    """Per-element reducibility verdicts for one poset."""

    parent: Poset
    down_beat: frozenset[int]
    up_beat: frozenset[int]
    weak_down_beat: frozenset[int]
    weak_up_beat: frozenset[int]
    chi_point: frozenset[int]

    def beat_points(self) -> frozenset[int]:
        return self.down_beat | self.up_beat


@dataclass(frozen=True)
class ReductionReport:
    """Outcome of one reduction run.

    ``removal_sequence`` lists (parent id, reason) in removal order;
    ``result`` is the reduced poset and ``mapping[i]`` is the parent id
    of its element i.  Replaying the sequence from the parent reproduces
    ``result`` exactly.
    """

    parent: Poset
    removal_sequence: tuple[tuple[int, str], ...]
    result: Poset
    mapping: tuple[int, ...]

    def removed_ids(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.removal_sequence)


def _priority(n: int, tie_break: Sequence[int] | None) -> list[int]:
    """Turn a total order on ids into a rank array (lower rank goes first)."""
    if tie_break is None:
        return list(range(n))
    order = [int(x) for x in tie_break]
    if sorted(order) != list(range(n)):
        raise ValueError("tie_break must be a permutation of all element ids")
    rank = [0] * n
    for pos, x in enumerate(order):
        rank[x] = pos
    return rank


def _unique_extremum(leq: np.ndarray, i: int, upward: bool) -> bool:
    """Does the strict up-set (or down-set) of row i have a unique minimal
    (resp. maximal) element inside the given order matrix?"""
    side = leq[i, :] if upward else leq[:, i]
    members = np.flatnonzero(side)
    members = members[members != i]
    if members.size == 0:
        return False
    sub = leq[np.ix_(members, members)]
    strict = sub & ~np.eye(members.size, dtype=bool)
    extremal = ~strict.any(axis=0) if upward else ~strict.any(axis=1)
    return int(extremal.sum()) == 1


def _beat_flags(leq: np.ndarray) -> tuple[list[int], list[int]]:
    n = leq.shape[0]
    down = [i for i in range(n) if _unique_extremum(leq, i, upward=True)]
    up = [i for i in range(n) if _unique_extremum(leq, i, upward=False)]
    return down, up


def classify_points(p: Poset) -> PointClass:
    """Flag every element as (weak) beat point and/or chi-point.

    chi-point status is read off the Moebius table in one pass
    (chi of the strict up-set is 1 minus the Moebius row sum); weak
    flags run the contractibility test on each strict up/down-set.
    Each verdict is independent of the others.
    """
    down, up = _beat_flags(p.leq)
    chi_above = p.mobius().chi_above()
    chi = frozenset(i for i in range(p.n) if chi_above[i] == 1)

    weak_down = set()
    weak_up = set()
    op = p.opposite()
    for x in range(p.n):
        above = p.up_set(x, strict=True)
        if len(above) and is_contractible(p.induced_subposet(above)[0]):
            weak_down.add(x)
        above_op = op.up_set(x, strict=True)
        if len(above_op) and is_contractible(op.induced_subposet(above_op)[0]):
            weak_up.add(x)

    return PointClass(
        parent=p,
        down_beat=frozenset(down),
        up_beat=frozenset(up),
        weak_down_beat=frozenset(weak_down),
        weak_up_beat=frozenset(weak_up),
        chi_point=chi,
    )


def core(p: Poset, tie_break: Sequence[int] | None = None) -> ReductionReport:
    """Remove beat points one at a time until none remain.

    At every step the surviving beat point least in the tie-break order
    is removed (down-beat recorded in preference to up-beat when an
    element is both).  By Stong's classification the result is unique up
    to isomorphism whatever the order.
    """
    rank = _priority(p.n, tie_break)
    members = list(range(p.n))
    leq = p.leq
    removal: list[tuple[int, str]] = []

    while True:
        down, up = _beat_flags(leq)
        reasons = {i: DOWN_BEAT for i in down}
        for i in up:
            reasons.setdefault(i, UP_BEAT)
        if not reasons:
            break
        i = min(reasons, key=lambda j: rank[members[j]])
        removal.append((members[i], reasons[i]))
        del members[i]
        leq = np.delete(np.delete(leq, i, axis=0), i, axis=1)

    result, mapping = p.induced_subposet(members)
    return ReductionReport(p, tuple(removal), result, mapping)


def is_contractible(p: Poset) -> bool:
    """True iff the core is a single point; the empty poset is not."""
    if p.n == 0:
        return False
    return core(p).result.n == 1


def chi_minimal_model(
    p: Poset, tie_break: Sequence[int] | None = None
) -> ReductionReport:
    """Remove chi-points one at a time until none remain.

    chi-point status is recomputed on the surviving subposet after every
    removal; the element least in the tie-break order goes first, so the
    default (ascending ids) is the canonical model.  Unlike cores the
    result is not known to be unique across orders, which is why the
    order is part of the signature.
    """
    rank = _priority(p.n, tie_break)
    members = list(range(p.n))
    leq = p.leq
    removal: list[tuple[int, str]] = []

    while members:
        mu = _mobius_matrix(leq)
        chi_above = 1 - mu.sum(axis=1)
        eligible = [i for i in range(len(members)) if chi_above[i] == 1]
        if not eligible:
            break
        i = min(eligible, key=lambda j: rank[members[j]])
        removal.append((members[i], CHI_POINT))
        del members[i]
        leq = np.delete(np.delete(leq, i, axis=0), i, axis=1)

    result, mapping = p.induced_subposet(members)
    return ReductionReport(p, tuple(removal), result, mapping)
