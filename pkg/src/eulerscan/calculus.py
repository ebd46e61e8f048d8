"""Integer functions on posets and their Euler calculus.

Any function h on a finite poset can be written as a linear combination
of filter indicators; its integral against the Euler characteristic is
the matching combination of filter characteristics, and is independent
of the chosen combination.  The canonical combination used here comes
from Moebius inversion over prime filters, which works for arbitrary
integer functions (corrupted sensor readings included).  Monotone
non-negative functions also admit the excursion-set decomposition, kept
as an independent cross-check route.

Functions take int64 values; out-of-range inputs fail loudly at
construction instead of wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import NegativeValues, NotMonotone, NotOrderPreserving
from .poset import ElementSet, Poset, _mobius_matrix


class PosetFunction:
    """An integer value per element of one poset."""

    __slots__ = ("parent", "values")

    def __init__(self, parent: Poset, values: Iterable[int]):
        arr = np.array(list(values), dtype=np.int64)  # OverflowError if too wide
        if arr.shape != (parent.n,):
            raise ValueError(f"expected {parent.n} values, got {arr.shape}")
        arr.flags.writeable = False
        self.parent = parent
        self.values = arr

    @classmethod
    def from_dict(cls, parent: Poset, mapping: Mapping[int, int]) -> "PosetFunction":
        if sorted(mapping) != list(range(parent.n)):
            raise ValueError("function must be defined on every element")
        return cls(parent, [mapping[x] for x in range(parent.n)])

    def __getitem__(self, x: int) -> int:
        return int(self.values[x])

    def __len__(self) -> int:
        return self.parent.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PosetFunction)
            and (self.parent is other.parent or self.parent.order_identical(other.parent))
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((id(self.parent), self.values.tobytes()))

    def __add__(self, other: "PosetFunction") -> "PosetFunction":
        self._check_same(other)
        return PosetFunction(self.parent, self.values + other.values)

    def __sub__(self, other: "PosetFunction") -> "PosetFunction":
        self._check_same(other)
        return PosetFunction(self.parent, self.values - other.values)

    def __rmul__(self, scalar: int) -> "PosetFunction":
        return PosetFunction(self.parent, int(scalar) * self.values)

    def _check_same(self, other: "PosetFunction"):
        if other.parent is not self.parent:
            raise ValueError("functions live on different posets")

    def with_value(self, x: int, value: int) -> "PosetFunction":
        vals = self.values.copy()
        vals[x] = value
        return PosetFunction(self.parent, vals)

    def is_monotone(self) -> bool:
        # covers generate the order, so checking them suffices
        return all(self.values[a] <= self.values[b] for a, b in self.parent.covers)

    def is_nonnegative(self) -> bool:
        return bool((self.values >= 0).all()) if len(self.values) else True

    def __repr__(self) -> str:
        return f"PosetFunction({self.values.tolist()})"


@dataclass(frozen=True)
class FilterLinearForm:
    """A formal sum of filter indicators with integer coefficients."""

    parent: Poset
    terms: tuple[tuple[int, ElementSet], ...]

    def __post_init__(self):
        for coeff, q in self.terms:
            if q.parent is not self.parent:
                raise ValueError("filter term belongs to a different poset")
            if not self.parent.is_filter(q):
                raise ValueError(f"term {sorted(q.members)} is not a filter")

    def evaluate(self) -> PosetFunction:
        """The pointwise function the form sums to."""
        vals = np.zeros(self.parent.n, dtype=np.int64)
        for coeff, q in self.terms:
            vals[q.mask()] += coeff
        return PosetFunction(self.parent, vals)

    def integral(self) -> int:
        """sum of coefficient * chi(filter), straight from the definition."""
        return sum(coeff * self.parent.chi_of(q) for coeff, q in self.terms)

    def coefficient_sum(self) -> int:
        return sum(coeff for coeff, _ in self.terms)


class PosetMap:
    """A map between posets, stored as one image element per domain element."""

    __slots__ = ("domain", "codomain", "image", "_order_preserving")

    def __init__(self, domain: Poset, codomain: Poset, image: Iterable[int]):
        img = np.array([int(x) for x in image], dtype=np.int64)
        if img.shape != (domain.n,):
            raise ValueError(f"expected {domain.n} image entries, got {img.shape}")
        if domain.n and ((img < 0) | (img >= codomain.n)).any():
            raise ValueError("image references elements outside the codomain")
        img.flags.writeable = False
        self.domain = domain
        self.codomain = codomain
        self.image = img
        self._order_preserving: bool | None = None

    @classmethod
    def identity(cls, p: Poset) -> "PosetMap":
        return cls(p, p, range(p.n))

    @classmethod
    def constant(cls, domain: Poset, codomain: Poset, value: int) -> "PosetMap":
        return cls(domain, codomain, [value] * domain.n)

    @classmethod
    def inclusion(
        cls, sub: Poset, parent: Poset, mapping: Iterable[int]
    ) -> "PosetMap":
        """Embed an induced subposet back into its parent."""
        return cls(sub, parent, mapping)

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    def compose(self, inner: "PosetMap") -> "PosetMap":
        """self after inner."""
        if inner.codomain is not self.domain:
            raise ValueError("maps do not compose")
        return PosetMap(inner.domain, self.codomain, self.image[inner.image])

    def is_order_preserving(self) -> bool:
        if self._order_preserving is None:
            self._order_preserving = all(
                self.codomain.leq[self.image[a], self.image[b]]
                for a, b in self.domain.covers
            )
        return self._order_preserving

    def _require_order_preserving(self):
        if not self.is_order_preserving():
            raise NotOrderPreserving("map does not preserve the order")


def indicator(p: Poset, s: "ElementSet | Iterable[int]") -> PosetFunction:
    """The 0/1 membership function of a subset (any subset, not only filters)."""
    members = p._member_list(s)
    vals = np.zeros(p.n, dtype=np.int64)
    vals[members] = 1
    return PosetFunction(p, vals)


def mobius_coefficients(h: PosetFunction) -> FilterLinearForm:
    """The canonical prime-filter form of h, via Moebius inversion.

    The coefficient at x is sum(mu(y, x) * h(y) for y <= x); evaluating
    the resulting form reproduces h exactly, and zero terms are dropped.
    """
    p = h.parent
    coeffs = h.values @ p.mobius().mu
    terms = tuple(
        (int(coeffs[x]), p.up_set(x)) for x in range(p.n) if coeffs[x] != 0
    )
    return FilterLinearForm(p, terms)


def integrate(h: PosetFunction) -> int:
    """Integral of h against the Euler characteristic (Moebius route).

    Equals the coefficient sum of the canonical prime-filter form, since
    every prime filter has chi 1.  Valid for arbitrary integer h.
    """
    return int((h.values @ h.parent.mobius().mu).sum())


def _integrate_on_members(h: PosetFunction, members: list[int]) -> int:
    """Integral of h restricted to the induced subposet on members."""
    sub = h.parent.leq[np.ix_(members, members)]
    return int((h.values[members] @ _mobius_matrix(sub)).sum())


def integrate_excursion(h: PosetFunction) -> int:
    """Integral of a monotone non-negative h via its excursion sets.

    Sums chi({h >= i}) for i = 1..max(h), collapsing runs of i with
    identical excursion sets.  Monotonicity makes each excursion set a
    filter; without it the decomposition is meaningless, so violations
    raise instead of returning a number.
    """
    if not h.is_monotone():
        raise NotMonotone("excursion route requires a monotone function")
    if not h.is_nonnegative():
        raise NegativeValues("excursion route requires non-negative values")
    total = 0
    previous = 0
    for level in sorted(set(h.values.tolist()) - {0}):
        members = np.flatnonzero(h.values >= level).tolist()
        chi = h.parent.chi_of(members)
        total += (level - previous) * chi
        previous = level
    return total


def pushforward(f: PosetMap, h: PosetFunction) -> PosetFunction:
    """Transport h along f: at each codomain element, the integral of h
    over the preimage of that element's prime ideal."""
    f._require_order_preserving()
    if h.parent is not f.domain:
        raise ValueError("function does not live on the map's domain")
    vals = []
    for x in range(f.codomain.n):
        ideal = f.codomain.leq[:, x]  # y <= x
        members = np.flatnonzero(ideal[f.image]).tolist()
        vals.append(_integrate_on_members(h, members) if members else 0)
    return PosetFunction(f.codomain, vals)


def pullback(f: PosetMap, h: PosetFunction) -> PosetFunction:
    """Compose h with f (no order-preservation required)."""
    if h.parent is not f.codomain:
        raise ValueError("function does not live on the map's codomain")
    return PosetFunction(f.domain, h.values[f.image])


def is_chi_distinguished(f: PosetMap) -> bool:
    """True iff the preimage of every prime filter has Euler characteristic 1.

    Such maps transport integrals along the pullback without loss.
    """
    f._require_order_preserving()
    for x in range(f.codomain.n):
        members = np.flatnonzero(f.codomain.leq[x, :][f.image]).tolist()
        if not members:
            return False
        sub = f.domain.leq[np.ix_(members, members)]
        if int(_mobius_matrix(sub).sum()) != 1:
            return False
    return True


def is_ascending_closure_operator(r: PosetMap) -> bool:
    """True iff r is an idempotent, inflationary endo-map (r.r = r, r(x) >= x)."""
    if not r.domain.order_identical(r.codomain):
        raise ValueError("closure operators must be endo-maps")
    r._require_order_preserving()
    idempotent = bool(np.array_equal(r.image[r.image], r.image))
    inflationary = all(r.domain.leq[x, r.image[x]] for x in range(r.domain.n))
    return idempotent and inflationary
