"""Intersection-structure analysis for uniform families.

Covers the t-intersecting and pseudo t-intersecting predicates, the width,
height, and tail decomposition, restricted shadows (tail-anchored and
prefix-anchored), star and semistar detection, and the base decomposition
obtained by tracing a family onto the prefix [2k-t].
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .core import Family, KSet, SetSystem, binomial, iter_elements, mask_of, prefix_mask

#: Above this size pairwise intersection checks switch to the vectorized path.
_VECTOR_THRESHOLD = 1024


def min_pairwise_intersection(masks: Sequence[int]) -> int:
    """Minimum |A intersect B| over unordered pairs of distinct members.

    Returns a large sentinel for fewer than two members.  The vectorized
    path computes the same exact integer minimum as the scalar path.
    """
    m = len(masks)
    if m < 2:
        return 1 << 30
    if m <= _VECTOR_THRESHOLD:
        best = 1 << 30
        for idx in range(m - 1):
            a = masks[idx]
            for b in masks[idx + 1 :]:
                c = (a & b).bit_count()
                if c < best:
                    best = c
        return best
    arr = np.array(masks, dtype=np.uint64)
    best = 1 << 30
    block = 256
    for start in range(0, m, block):
        chunk = arr[start : start + block]
        counts = np.bitwise_count(chunk[:, None] & arr[None, :])
        # the full matrix includes the diagonal |A & A| = k, which never
        # undercuts a genuine violation since violations are below k
        np.fill_diagonal(counts[:, start : start + chunk.shape[0]], 255)
        cur = int(counts.min())
        if cur < best:
            best = cur
    return best


def min_cross_intersection(a_masks: Sequence[int], b_masks: Sequence[int]) -> int:
    """Minimum |A intersect B| over pairs drawn from two mask collections."""
    if not a_masks or not b_masks:
        return 1 << 30
    if len(a_masks) * len(b_masks) <= _VECTOR_THRESHOLD ** 2 // 256:
        return min((a & b).bit_count() for a in a_masks for b in b_masks)
    arr_b = np.array(b_masks, dtype=np.uint64)
    best = 1 << 30
    block = max(1, (1 << 22) // max(1, len(b_masks)))
    arr_a = np.array(a_masks, dtype=np.uint64)
    for start in range(0, len(a_masks), block):
        chunk = arr_a[start : start + block]
        cur = int(np.bitwise_count(chunk[:, None] & arr_b[None, :]).min())
        if cur < best:
            best = cur
    return best


def is_t_intersecting(f: Family, t: int) -> bool:
    """True iff every two members (the diagonal included) share >= t elements."""
    if t < 1:
        raise ValueError(f"intersection threshold t must be >= 1, got {t}")
    if len(f) == 0:
        return True
    if f.k < t:
        return False
    masks = f.masks
    if len(masks) <= _VECTOR_THRESHOLD:
        for idx in range(len(masks) - 1):
            a = masks[idx]
            for b in masks[idx + 1 :]:
                if (a & b).bit_count() < t:
                    return False
        return True
    return min_pairwise_intersection(masks) >= t


def _min_valid_height(mask: int, t: int, k: int) -> int | None:
    """Least h in [0, k-t] with |F intersect [t+2h]| >= t+h, None if none."""
    for h in range(k - t + 1):
        if (mask & prefix_mask(t + 2 * h)).bit_count() >= t + h:
            return h
    return None


def is_pseudo_t_intersecting(f: Family, t: int) -> bool:
    """True iff every member meets some prefix [t+2h] in at least t+h points."""
    if len(f) == 0:
        return True
    if f.k < t:
        return False
    return all(_min_valid_height(m, t, f.k) is not None for m in f.masks)


def width(f: Family, t: int) -> int:
    """Least w such that every member satisfies the pseudo condition with h <= w.

    The empty family has width 0.  Raises for families that are not pseudo
    t-intersecting.
    """
    w = 0
    for m in f.masks:
        h = _min_valid_height(m, t, f.k)
        if h is None:
            raise ValueError(f"family is not pseudo {t}-intersecting: member {KSet(m)!r} fits no prefix")
        if h > w:
            w = h
    return w


def height(member: KSet, t: int, w: int) -> int:
    """Largest h in [0, w] with |member intersect [t+2h]| >= t+h.

    The width is an explicit argument because subfamily analyses reuse a
    member under a threshold different from its parent family's width.
    """
    best = None
    for h in range(w + 1):
        if member.prefix_count(t + 2 * h) >= t + h:
            best = h
    if best is None:
        raise ValueError(f"member {member!r} admits no height for t={t}, w={w}")
    return best


def tail(member: KSet, t: int, w: int) -> KSet:
    """The member minus the prefix [t + 2 height]."""
    h = height(member, t, w)
    return KSet(member.mask & ~prefix_mask(t + 2 * h))


@dataclass(frozen=True)
class TailPartition:
    """Members grouped by tail, along with the width used to compute heights."""

    entries: dict[KSet, Family]
    width: int
    t: int

    def total(self) -> int:
        return sum(len(sub) for sub in self.entries.values())


def tail_partition(f: Family, t: int) -> TailPartition:
    """Group members by tail; the groups partition the family.

    During construction every member below the width is checked to meet its
    prefix exactly, which is forced for pseudo t-intersecting families.
    """
    w = width(f, t)
    groups: dict[int, list[int]] = {}
    for m in f.masks:
        h = height(KSet(m), t, w)
        pm = prefix_mask(t + 2 * h)
        if h < w:
            assert (m & pm).bit_count() == t + h, "sub-width member exceeds its prefix quota"
        groups.setdefault(m & ~pm, []).append(m)
    entries = {KSet(tm): Family.from_masks(ms, f.k) for tm, ms in sorted(groups.items())}
    return TailPartition(entries=entries, width=w, t=t)


def _restricted_shadow_masks(member_mask: int, deletable_mask: int, j: int) -> Iterable[int]:
    els = list(iter_elements(deletable_mask))
    for drop in combinations(els, j):
        yield member_mask & ~mask_of(drop)


def tail_restricted_shadow(f: Family, t: int, j: int) -> Family:
    """Shadow sets forced to retain each member's tail.

    For every member, deletes j elements from the part inside the prefix
    [t + 2 height]; the union over members is returned.  Valid for
    0 < j <= t on pseudo t-intersecting families.
    """
    if not 0 < j <= t:
        raise ValueError(f"restricted shadow depth needs 0 < j <= t, got j={j}, t={t}")
    w = width(f, t)
    out: set[int] = set()
    for m in f.masks:
        h = height(KSet(m), t, w)
        deletable = m & prefix_mask(t + 2 * h)
        out.update(_restricted_shadow_masks(m, deletable, j))
    return Family.from_masks(out, f.k - j)


def tail_restricted_shadow_of_member(member: KSet, t: int, w: int, j: int) -> Family:
    """Restricted shadow of a single member under an explicit width."""
    h = height(member, t, w)
    deletable = member.mask & prefix_mask(t + 2 * h)
    return Family.from_masks(_restricted_shadow_masks(member.mask, deletable, j), len(member) - j)


def prefix_restricted_shadow(f: Family, m: int, j: int) -> Family:
    """Shadow sets that agree with their source outside the prefix [m].

    Deletes j elements from F intersect [m] only; members meeting the prefix
    in fewer than j points contribute nothing.
    """
    if not 0 < j < f.k:
        raise ValueError(f"shadow depth needs 0 < j < k, got j={j}, k={f.k}")
    pm = prefix_mask(m)
    out: set[int] = set()
    for mem in f.masks:
        inner = mem & pm
        if inner.bit_count() < j:
            continue
        out.update(_restricted_shadow_masks(mem, inner, j))
    return Family.from_masks(out, f.k - j)


def is_t_star(f: Family, t: int) -> bool:
    """True iff some fixed t-set is contained in every member."""
    if len(f) == 0:
        return True
    common = ~0
    for m in f.masks:
        common &= m
    return common.bit_count() >= t


def is_semistar(f: Family, t: int) -> bool:
    """True iff some (t+1)-set D meets every member in >= t elements.

    The search runs over (t+1)-subsets of the union of the members plus the
    initial prefix [t+1], which is exhaustive: a valid D consists of covered
    elements up to at most one slack element, and slack elements are
    interchangeable.
    """
    if len(f) == 0:
        return True
    union = 0
    for m in f.masks:
        union |= m
    candidates = sorted(set(iter_elements(union)) | set(range(1, t + 2)))
    for d in combinations(candidates, t + 1):
        dm = mask_of(d)
        if all((m & dm).bit_count() >= t for m in f.masks):
            return True
    return False


@dataclass(frozen=True)
class BaseDecomposition:
    """Traces of a k-uniform family on the prefix [2k-t], split by cardinality."""

    base: SetSystem
    levels: dict[int, Family]
    counts: dict[int, int]
    k: int
    t: int

    def b(self, ell: int) -> int:
        return self.counts.get(ell, 0)


def base_decomposition(f: Family, k: int, t: int) -> BaseDecomposition:
    """Trace every member onto [2k-t] and group the traces by size."""
    if len(f) and f.k != k:
        raise ValueError(f"family has k={f.k}, expected {k}")
    pm = prefix_mask(2 * k - t)
    traces = {m & pm for m in f.masks}
    levels: dict[int, list[int]] = {}
    for tr in traces:
        levels.setdefault(tr.bit_count(), []).append(tr)
    level_map = {ell: Family.from_masks(ms, ell) for ell, ms in sorted(levels.items())}
    counts = {ell: len(fam) for ell, fam in level_map.items()}
    return BaseDecomposition(
        base=SetSystem.from_masks(traces), levels=level_map, counts=counts, k=k, t=t
    )


@dataclass(frozen=True)
class BT1Classification:
    """Structure report for the (t+1)-level of a base decomposition."""

    a3_present: bool
    b_t1: int
    s: int | None
    contained_in_a1: bool


def classify_b_t1(f: Family, k: int, t: int) -> BT1Classification:
    """Classify the (t+1)-level of the base of a shifted t-intersecting family.

    When the off-pattern trace [t+2] minus {t} appears, the family must sit
    inside the h=1 canonical family; otherwise the (t+1)-level must be the
    consecutive run {[t] + {x} : t+1 <= x <= t+s} and s is returned.  Either
    assertion failing signals a bug, since both facts are forced for shifted
    t-intersecting input, which is checked eagerly.
    """
    from .shift import is_shifted

    if not is_shifted(f):
        raise ValueError("classification requires a shifted family")
    if not is_t_intersecting(f, t):
        raise ValueError(f"classification requires a {t}-intersecting family")
    decomp = base_decomposition(f, k, t)
    level = decomp.levels.get(t + 1, Family((), k=t + 1))
    b_t1 = len(level)
    a3_mask = prefix_mask(t + 2) ^ (1 << (t - 1))
    a3_present = a3_mask in set(level.masks)
    in_a1 = all((m & prefix_mask(t + 2)).bit_count() >= t + 1 for m in f.masks)
    if a3_present:
        assert in_a1, "off-pattern (t+1)-trace present but family escapes the h=1 family"
        return BT1Classification(a3_present=True, b_t1=b_t1, s=None, contained_in_a1=in_a1)
    expected = {prefix_mask(t) | (1 << (x - 1)) for x in range(t + 1, t + b_t1 + 1)}
    assert set(level.masks) == expected, "non-consecutive (t+1)-level without the off-pattern trace"
    return BT1Classification(a3_present=False, b_t1=b_t1, s=b_t1, contained_in_a1=in_a1)
