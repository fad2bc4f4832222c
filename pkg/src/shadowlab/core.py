"""Ground-set parameters, bit-vector sets, family containers, exact arithmetic.

Sets over the ground set [n] = {1, ..., n} are stored as machine-word bit
vectors (element i occupies bit i-1), capped at 64 positions.  Families are
immutable, deduplicated, and iterate in numeric bit-vector order so that
every downstream report is reproducible.  All ratio values are exact
rationals; no floating point enters any bound computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

#: Hard cap on ground-set width: one machine word.
WORD_BITS = 64

#: Exact reduced rational used for every bound value.  `fractions.Fraction`
#: already guarantees gcd-reduced storage, positive denominator, and exact
#: comparison/arithmetic, which is precisely the contract required here.
ExactRatio = Fraction


class CapacityError(Exception):
    """A requested ground set or enumeration exceeds the configured capacity."""


def _check_width(n: int) -> None:
    if n > WORD_BITS:
        raise CapacityError(f"ground-set size {n} exceeds the {WORD_BITS}-bit width cap")


def mask_of(elements: Iterable[int]) -> int:
    """Pack positive element labels into a bit mask (element i -> bit i-1)."""
    m = 0
    for e in elements:
        if not 1 <= e <= WORD_BITS:
            raise CapacityError(f"element {e} outside [1, {WORD_BITS}]")
        m |= 1 << (e - 1)
    return m


def iter_elements(mask: int) -> Iterator[int]:
    """Yield the elements of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def prefix_mask(m: int) -> int:
    """Mask of the prefix [m] = {1, ..., m}; m = 0 gives the empty mask."""
    if m <= 0:
        return 0
    return (1 << min(m, WORD_BITS)) - 1


@dataclass(frozen=True, slots=True)
class Params:
    """Standing parameter chain n > k > t >= j >= 1.

    Individual operations state weaker preconditions of their own; this
    record exists for callers that hold all four parameters at once.
    """

    n: int
    k: int
    t: int
    j: int

    def validate(self) -> "Params":
        if not (self.n > self.k > self.t >= self.j >= 1):
            raise ValueError(f"need n > k > t >= j >= 1, got {self}")
        _check_width(self.n)
        return self


@dataclass(frozen=True, slots=True, order=True)
class KSet:
    """A subset of the ground set, stored as a fixed-width bit vector.

    Ordering and hashing follow the numeric mask value, which makes sorted
    containers deterministic.
    """

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> WORD_BITS:
            raise CapacityError(f"mask 0x{self.mask:x} outside the {WORD_BITS}-bit width")

    @classmethod
    def of(cls, *elements: int) -> "KSet":
        return cls(mask_of(elements))

    @classmethod
    def from_iterable(cls, elements: Iterable[int]) -> "KSet":
        return cls(mask_of(elements))

    @property
    def elements(self) -> tuple[int, ...]:
        """Sorted element tuple view (a_1 < ... < a_k)."""
        return tuple(iter_elements(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_elements(self.mask)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= WORD_BITS and bool(self.mask >> (element - 1) & 1)

    def __and__(self, other: "KSet") -> "KSet":
        return KSet(self.mask & other.mask)

    def __or__(self, other: "KSet") -> "KSet":
        return KSet(self.mask | other.mask)

    def __sub__(self, other: "KSet") -> "KSet":
        return KSet(self.mask & ~other.mask)

    def intersection_size(self, other: "KSet") -> int:
        return (self.mask & other.mask).bit_count()

    def prefix_count(self, m: int) -> int:
        """|self intersect [m]|."""
        return (self.mask & prefix_mask(m)).bit_count()

    def issubset(self, other: "KSet") -> bool:
        return self.mask & ~other.mask == 0

    def max_element(self) -> int:
        return self.mask.bit_length()

    def __repr__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


class Family:
    """A deduplicated collection of k-sets, all of one cardinality.

    Iteration order is ascending numeric mask order.  Instances are
    immutable and hashable.
    """

    __slots__ = ("_masks", "_mask_set", "k")

    def __init__(self, members: Iterable[KSet] = (), k: int | None = None):
        masks = sorted({m.mask for m in members})
        self._finish_init(masks, k)

    def _finish_init(self, masks: list[int], k: int | None) -> None:
        if masks:
            sizes = {m.bit_count() for m in masks}
            if len(sizes) > 1:
                raise ValueError(f"mixed member cardinalities {sorted(sizes)} in a uniform family")
            inferred = sizes.pop()
            if k is not None and k != inferred:
                raise ValueError(f"declared k={k} but members have cardinality {inferred}")
            k = inferred
        elif k is None:
            raise ValueError("empty family needs an explicit k")
        self._masks = tuple(masks)
        self._mask_set = frozenset(masks)
        self.k = k

    @classmethod
    def from_masks(cls, masks: Iterable[int], k: int | None = None) -> "Family":
        fam = cls.__new__(cls)
        fam._finish_init(sorted(set(masks)), k)
        return fam

    @classmethod
    def from_elements(cls, sets: Iterable[Iterable[int]], k: int | None = None) -> "Family":
        return cls.from_masks((mask_of(s) for s in sets), k)

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def __len__(self) -> int:
        return len(self._masks)

    def __iter__(self) -> Iterator[KSet]:
        return (KSet(m) for m in self._masks)

    def __contains__(self, member: KSet) -> bool:
        return member.mask in self._mask_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.k == other.k and self._mask_set == other._mask_set

    def __hash__(self) -> int:
        return hash((self.k, self._mask_set))

    def union(self, other: "Family") -> "Family":
        if other and self and self.k != other.k:
            raise ValueError("union of families with different k")
        return Family.from_masks(self._mask_set | other._mask_set, self.k if self else other.k)

    def difference(self, other: "Family") -> "Family":
        return Family.from_masks(self._mask_set - other._mask_set, self.k)

    def intersection(self, other: "Family") -> "Family":
        return Family.from_masks(self._mask_set & other._mask_set, self.k)

    def restrict_to(self, predicate) -> "Family":
        """Subfamily of members whose KSet satisfies the predicate."""
        return Family.from_masks((m for m in self._masks if predicate(KSet(m))), self.k)

    def __repr__(self) -> str:
        if len(self) > 8:
            return f"Family(k={self.k}, size={len(self)})"
        return "Family{" + ", ".join(repr(KSet(m)) for m in self._masks) + "}"


class SetSystem:
    """A deduplicated collection of sets of mixed cardinalities."""

    __slots__ = ("_masks", "_mask_set")

    def __init__(self, members: Iterable[KSet] = ()):
        self._masks = tuple(sorted({m.mask for m in members}))
        self._mask_set = frozenset(self._masks)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "SetSystem":
        sys = cls.__new__(cls)
        sys._masks = tuple(sorted(set(masks)))
        sys._mask_set = frozenset(sys._masks)
        return sys

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def __len__(self) -> int:
        return len(self._masks)

    def __iter__(self) -> Iterator[KSet]:
        return (KSet(m) for m in self._masks)

    def __contains__(self, member: KSet) -> bool:
        return member.mask in self._mask_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self._mask_set == other._mask_set

    def __hash__(self) -> int:
        return hash(self._mask_set)

    def cardinalities(self) -> tuple[int, ...]:
        return tuple(sorted({m.bit_count() for m in self._masks}))

    def level(self, ell: int) -> Family:
        """Extract the subfamily of ell-sets."""
        return Family.from_masks((m for m in self._masks if m.bit_count() == ell), ell)

    def __repr__(self) -> str:
        return f"SetSystem(size={len(self)}, levels={self.cardinalities()})"


def binomial(a: int, b: int) -> int:
    """C(a, b); zero when b < 0 or b > a.  a must be non-negative."""
    if a < 0:
        raise ValueError(f"binomial needs a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def exact_ratio(p: int, q: int) -> ExactRatio:
    """Reduced rational p/q."""
    return Fraction(p, q)


def enumerate_ksubsets(n: int, k: int) -> Family:
    """The full layer: every k-subset of [n]."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    _check_width(n)
    return Family.from_masks((mask_of(c) for c in combinations(range(1, n + 1), k)), k)


def shifting_order_leq(a: KSet, b: KSet) -> bool:
    """Componentwise order on sorted element tuples: a precedes-or-equals b.

    Requires equal cardinalities; the relation is only defined within one
    layer.
    """
    if len(a) != len(b):
        raise ValueError(f"shifting order needs equal cardinalities, got {len(a)} and {len(b)}")
    return all(x <= y for x, y in zip(a.elements, b.elements))


def prefix_intersection_size(f: KSet, m: int) -> int:
    """|f intersect [m]| for m >= 0."""
    if m < 0:
        raise ValueError(f"prefix length must be >= 0, got {m}")
    return f.prefix_count(m)
