"""Finite posets stored as dense order matrices.

Elements are always the integers ``0..n-1``, optionally carrying labels.
A poset is built from Hasse-diagram cover pairs; the full order is the
reflexive-transitive closure of the covers and lives in a read-only
``n x n`` boolean matrix ``leq``, with ``leq[x, y]`` meaning ``x <= y``.

Two independent Euler-characteristic routes are provided: the sum over the
integer Moebius matrix (the exact inverse of the zeta matrix), and an
alternating count of strictly increasing chains.  They must agree on every
poset, and the test suite leans on that redundancy.

All arithmetic is exact.  Matrices use int64 up to ``_INT64_SAFE_N``
elements and fall back to Python-int object arrays beyond that, where
chain counts could conceivably overflow 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CycleDetected, SizeLimitExceeded

_INT64_SAFE_N = 60


def _exact_dtype(n: int):
    return np.int64 if n <= _INT64_SAFE_N else object


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _closure(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of an adjacency matrix, by doubling."""
    n = adj.shape[0]
    reach = adj | np.eye(n, dtype=bool)
    while True:
        nxt = reach | (reach @ reach)
        if np.array_equal(nxt, reach):
            return reach
        reach = nxt


def _mobius_matrix(leq: np.ndarray) -> np.ndarray:
    """Exact integer inverse of the zeta matrix of ``leq``.

    Columns are filled in topological order using the recursion
    mu(x, x) = 1 and mu(x, y) = -sum(mu(x, z) for x <= z < y).
    """
    n = leq.shape[0]
    dtype = _exact_dtype(n)
    mu = np.zeros((n, n), dtype=dtype)
    if n == 0:
        return mu
    lt = leq & ~np.eye(n, dtype=bool)
    # |down-set| strictly increases along <, so sorting by it is topological.
    order = np.argsort(leq.sum(axis=0), kind="stable")
    for y in order:
        below = lt[:, y]
        if below.any():
            mu[:, y] = -mu[:, below].sum(axis=1)
        mu[y, y] = 1
    return mu


def _chi_of_leq(leq: np.ndarray) -> int:
    return int(_mobius_matrix(leq).sum())


def _covers_of_leq(leq: np.ndarray) -> frozenset[tuple[int, int]]:
    """Transitive reduction: pairs x < y with nothing strictly in between."""
    n = leq.shape[0]
    lt = leq & ~np.eye(n, dtype=bool)
    direct = lt & ~(lt @ lt)
    return frozenset((int(a), int(b)) for a, b in np.argwhere(direct))


@dataclass(frozen=True)
class ElementSet:
    """A subset of one poset's elements, tied to that poset by identity."""

    parent: "Poset"
    members: frozenset[int]

    def __post_init__(self):
        bad = [x for x in self.members if not 0 <= x < self.parent.n]
        if bad:
            raise ValueError(f"element ids out of range: {sorted(bad)}")

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.n, dtype=bool)
        m[list(self.members)] = True
        return m

    def union(self, other: "ElementSet") -> "ElementSet":
        self._check_same(other)
        return ElementSet(self.parent, self.members | other.members)

    def intersection(self, other: "ElementSet") -> "ElementSet":
        self._check_same(other)
        return ElementSet(self.parent, self.members & other.members)

    def _check_same(self, other: "ElementSet"):
        if other.parent is not self.parent:
            raise ValueError("element sets belong to different posets")

    def labels(self) -> tuple[str, ...]:
        return tuple(self.parent.label(x) for x in self)


@dataclass(frozen=True)
class MobiusTable:
    """The integer Moebius matrix of one poset (inverse of its zeta matrix)."""

    parent: "Poset"
    mu: np.ndarray

    def __getitem__(self, pair: tuple[int, int]) -> int:
        x, y = pair
        return int(self.mu[x, y])

    def chi(self) -> int:
        """Euler characteristic: the sum of every Moebius entry."""
        return int(self.mu.sum())

    def chi_above(self) -> np.ndarray:
        """chi of the strict up-set of each element, as an int array.

        For any x, chi({y : y > x}) = 1 - sum(mu[x, :]): adjoin a top
        element t; the recursion forces mu(x, t) = -sum(mu[x, :]), and that
        entry is the reduced Euler characteristic of the open interval
        (x, t), which is exactly the strict up-set.  Cross-checked against
        the direct subposet route in the test suite.
        """
        return 1 - self.mu.sum(axis=1)

    def chi_below(self) -> np.ndarray:
        """chi of the strict down-set of each element (dual of chi_above)."""
        return 1 - self.mu.sum(axis=0)


class Poset:
    """A finite partial order on the elements ``0..n-1``.

    Instances are immutable after construction and safe to share between
    any number of concurrent readers.  Use :meth:`from_covers` to build
    one; the plain constructor trusts its arguments.
    """

    __slots__ = ("n", "labels", "covers", "leq", "dropped_covers", "_mobius")

    def __init__(
        self,
        n: int,
        covers: frozenset[tuple[int, int]],
        leq: np.ndarray,
        labels: tuple[str, ...] | None = None,
        dropped_covers: tuple[tuple[int, int], ...] = (),
    ):
        self.n = n
        self.covers = covers
        self.leq = _freeze(leq)
        self.labels = labels
        self.dropped_covers = dropped_covers
        self._mobius: MobiusTable | None = None

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def from_covers(
        cls,
        n: int,
        covers: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Poset":
        """Build a poset from Hasse-diagram pairs ``(lower, upper)``.

        Duplicate pairs are ignored.  Pairs already implied by a longer
        path are dropped and reported on ``dropped_covers`` rather than
        rejected; a directed cycle raises :class:`CycleDetected`.
        """
        pairs = set()
        for a, b in covers:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"cover ({a}, {b}) references ids outside 0..{n - 1}")
            if a == b:
                raise CycleDetected(f"self-loop at element {a}")
            pairs.add((a, b))

        adj = np.zeros((n, n), dtype=bool)
        for a, b in pairs:
            adj[a, b] = True
        cls._check_acyclic(adj)

        leq = _closure(adj)
        lt = leq & ~np.eye(n, dtype=bool)
        implied = lt @ lt  # a < z < b for some z
        kept = frozenset(p for p in pairs if not implied[p])
        dropped = tuple(sorted(pairs - kept))

        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError("labels must have one entry per element")
        return cls(n, kept, leq, labels, dropped)

    @classmethod
    def _from_leq(
        cls, leq: np.ndarray, labels: tuple[str, ...] | None = None
    ) -> "Poset":
        """Internal: wrap an already-valid order matrix."""
        return cls(leq.shape[0], _covers_of_leq(leq), leq.copy(), labels)

    @staticmethod
    def _check_acyclic(adj: np.ndarray):
        n = adj.shape[0]
        indeg = adj.sum(axis=0)
        ready = [i for i in range(n) if indeg[i] == 0]
        seen = 0
        while ready:
            u = ready.pop()
            seen += 1
            for v in np.flatnonzero(adj[u]):
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(int(v))
        if seen != n:
            raise CycleDetected("cover relation contains a directed cycle")

    # ------------------------------------------------------------------
    # element bookkeeping
    # ------------------------------------------------------------------

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def subset(self, members: Iterable[int]) -> ElementSet:
        return ElementSet(self, frozenset(int(x) for x in members))

    def all_elements(self) -> ElementSet:
        return ElementSet(self, frozenset(range(self.n)))

    def _member_list(self, s: "ElementSet | Iterable[int]") -> list[int]:
        if isinstance(s, ElementSet):
            if s.parent is not self:
                raise ValueError("element set belongs to a different poset")
            return sorted(s.members)
        out = sorted(int(x) for x in s)
        for x in out:
            if not 0 <= x < self.n:
                raise ValueError(f"element id {x} out of range")
        return out

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={len(self.covers)})"

    # ------------------------------------------------------------------
    # order primitives
    # ------------------------------------------------------------------

    def less_equal(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def up_set(self, x: int, strict: bool = False) -> ElementSet:
        """Everything above x: the prime filter, or the strict up-set."""
        members = set(np.flatnonzero(self.leq[x]).tolist())
        if strict:
            members.discard(x)
        return ElementSet(self, frozenset(members))

    def down_set(self, x: int, strict: bool = False) -> ElementSet:
        """Everything below x: the prime ideal, or the strict down-set."""
        members = set(np.flatnonzero(self.leq[:, x]).tolist())
        if strict:
            members.discard(x)
        return ElementSet(self, frozenset(members))

    def is_filter(self, s: "ElementSet | Iterable[int]") -> bool:
        """True iff s is closed upward (x in s and x <= y imply y in s)."""
        members = self._member_list(s)
        if not members:
            return True
        reachable = self.leq[members].any(axis=0)
        mask = np.zeros(self.n, dtype=bool)
        mask[members] = True
        return bool(np.all(mask | ~reachable))

    def induced_subposet(
        self, s: "ElementSet | Iterable[int]"
    ) -> tuple["Poset", tuple[int, ...]]:
        """Restrict the order to s.

        Returns the subposet (elements renumbered 0..k-1 in ascending
        parent order) and the tuple mapping new ids back to parent ids.
        Covers are recomputed from the restricted order, so they may
        include pairs that were not covers of the parent.
        """
        members = self._member_list(s)
        sub = self.leq[np.ix_(members, members)]
        labels = (
            tuple(self.labels[i] for i in members) if self.labels is not None else None
        )
        return Poset._from_leq(sub, labels), tuple(members)

    def opposite(self) -> "Poset":
        """The same elements with all order relations reversed."""
        return Poset._from_leq(self.leq.T.copy(), self.labels)

    def order_identical(self, other: "Poset") -> bool:
        return self.n == other.n and np.array_equal(self.leq, other.leq)

    # ------------------------------------------------------------------
    # zeta / Moebius / Euler characteristic
    # ------------------------------------------------------------------

    def zeta(self) -> np.ndarray:
        """The (0,1) order matrix as an exact integer matrix."""
        return self.leq.astype(_exact_dtype(self.n))

    def mobius(self) -> MobiusTable:
        """The Moebius table (cached; construction is single-threaded)."""
        if self._mobius is None:
            self._mobius = MobiusTable(self, _freeze(_mobius_matrix(self.leq)))
        return self._mobius

    def euler_characteristic(self) -> int:
        """chi via the Moebius route: the sum of all inverse-zeta entries."""
        return self.mobius().chi()

    def euler_characteristic_by_chains(self) -> int:
        """chi via the chain route: alternating count of strict chains.

        The k-th power of the strict order matrix counts chains of k+1
        elements, so the alternating sum of its totals is the Euler
        characteristic of the order complex.  Independent of the Moebius
        recursion; the two must always agree.
        """
        n = self.n
        lt = (self.leq & ~np.eye(n, dtype=bool)).astype(_exact_dtype(n))
        total = n
        sign = -1
        power = lt
        while power.any():
            total += sign * int(power.sum())
            sign = -sign
            power = power @ lt
        return total

    def chi_of(self, s: "ElementSet | Iterable[int]") -> int:
        """Euler characteristic of the induced subposet on s."""
        members = self._member_list(s)
        return _chi_of_leq(self.leq[np.ix_(members, members)])


# ----------------------------------------------------------------------
# isomorphism testing
# ----------------------------------------------------------------------


def _signatures(p: Poset) -> list[tuple]:
    cov = np.zeros((p.n, p.n), dtype=bool)
    for a, b in p.covers:
        cov[a, b] = True
    cov_out = cov.sum(axis=1)
    cov_in = cov.sum(axis=0)
    down = p.leq.sum(axis=0)
    up = p.leq.sum(axis=1)
    base = [
        (int(cov_in[x]), int(cov_out[x]), int(down[x]), int(up[x]))
        for x in range(p.n)
    ]
    # one refinement round: fold in the sorted signatures of cover-neighbours
    refined = []
    for x in range(p.n):
        above = tuple(sorted(base[int(y)] for y in np.flatnonzero(cov[x])))
        below = tuple(sorted(base[int(y)] for y in np.flatnonzero(cov[:, x])))
        refined.append((base[x], above, below))
    return refined


def are_isomorphic(p: Poset, q: Poset, size_limit: int = 12) -> bool:
    """Decide order-isomorphism by pruned backtracking.

    Exponential in the worst case; intended for small posets (core
    uniqueness checks), so sizes above ``size_limit`` raise
    :class:`SizeLimitExceeded` instead of silently taking forever.
    """
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False
    if p.n > size_limit:
        raise SizeLimitExceeded(
            f"isomorphism search limited to {size_limit} elements, got {p.n}"
        )
    sig_p, sig_q = _signatures(p), _signatures(q)
    if sorted(sig_p) != sorted(sig_q):
        return False

    n = p.n
    candidates = {x: [y for y in range(n) if sig_q[y] == sig_p[x]] for x in range(n)}
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))
    assign = [-1] * n
    used = [False] * n
    leq_p, leq_q = p.leq, q.leq

    def extend(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        for y in candidates[x]:
            if used[y]:
                continue
            ok = True
            for x2 in order[:i]:
                y2 = assign[x2]
                if leq_p[x, x2] != leq_q[y, y2] or leq_p[x2, x] != leq_q[y2, y]:
                    ok = False
                    break
            if ok:
                assign[x] = y
                used[y] = True
                if extend(i + 1):
                    return True
                used[y] = False
                assign[x] = -1
        return False

    return extend(0)
