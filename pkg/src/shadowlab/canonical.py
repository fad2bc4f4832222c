"""Constructors for the named families of intersecting-shadow theory.

All constructors return deduplicated uniform families in deterministic
order.  The union construction `example15` re-verifies the t-intersecting
property on every build and fails loudly if it does not hold.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .core import CapacityError, Family, KSet, WORD_BITS, mask_of, prefix_mask
from .structure import is_t_intersecting


@lru_cache(maxsize=256)
def _frankl_masks(n: int, k: int, t: int, h: int) -> tuple[int, ...]:
    pm = prefix_mask(t + 2 * h)
    need = h + t
    out = []
    for c in combinations(range(1, n + 1), k):
        m = mask_of(c)
        if (m & pm).bit_count() >= need:
            out.append(m)
    return tuple(out)


def frankl_family(n: int, k: int, t: int, h: int) -> Family:
    """The canonical t-intersecting candidate at height h:
    all k-subsets of [n] meeting [t+2h] in at least t+h elements.
    """
    if not 0 <= h <= k - t:
        raise ValueError(f"height h must satisfy 0 <= h <= k-t, got h={h}, k={k}, t={t}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    if n > WORD_BITS:
        raise CapacityError(f"ground-set size {n} exceeds the {WORD_BITS}-bit width cap")
    return Family.from_masks(_frankl_masks(n, k, t, h), k)


def full_star(n: int, k: int, t: int) -> Family:
    """All k-sets containing the fixed prefix [t]; size C(n-t, k-t)."""
    if not n >= k >= t >= 0:
        raise ValueError(f"need n >= k >= t >= 0, got n={n}, k={k}, t={t}")
    if n > WORD_BITS:
        raise CapacityError(f"ground-set size {n} exceeds the {WORD_BITS}-bit width cap")
    pm = prefix_mask(t)
    return Family.from_masks(
        (pm | mask_of(rest) for rest in combinations(range(t + 1, n + 1), k - t)), k
    )


def hm_family(n: int, k: int, t: int) -> Family:
    """The extremal non-star construction: prefix-[t] sets forced to touch
    [t+1, k+1], together with the t sets [k+1] minus one prefix element.
    """
    if n < k + 1:
        raise ValueError(f"need n >= k+1, got n={n}, k={k}")
    if k + 1 <= t:
        raise ValueError(f"need k+1 > t, got k={k}, t={t}")
    if n > WORD_BITS:
        raise CapacityError(f"ground-set size {n} exceeds the {WORD_BITS}-bit width cap")
    pm = prefix_mask(t)
    window = prefix_mask(k + 1) & ~pm
    masks = []
    for rest in combinations(range(t + 1, n + 1), k - t):
        m = pm | mask_of(rest)
        if m & window:
            masks.append(m)
    full = prefix_mask(k + 1)
    for x in range(1, t + 1):
        masks.append(full ^ (1 << (x - 1)))
    return Family.from_masks(masks, k)


def example15(n: int, k: int, t: int, s: int) -> Family:
    """Union family showing the size hypothesis of the large-family shadow
    bound cannot be dropped: an in-prefix part (k-sets of [2k-t] meeting
    [k-1+s] in at least t+s points) joined with a product part
    (a (k-1)-set of [k-1+s] plus one element beyond 2k-t).

    The t-intersecting property is re-verified on construction.
    """
    if not k > t > 2:
        raise ValueError(f"need k > t > 2, got k={k}, t={t}")
    if not 0 <= s < k - t - 1:
        raise ValueError(f"need 0 <= s < k-t-1, got s={s}, k={k}, t={t}")
    if not n > 2 * k - t:
        raise ValueError(f"need n > 2k-t, got n={n}, k={k}, t={t}")
    if n > WORD_BITS:
        raise CapacityError(f"ground-set size {n} exceeds the {WORD_BITS}-bit width cap")
    base = 2 * k - t
    pref = k - 1 + s
    pm = prefix_mask(pref)
    masks = []
    for c in combinations(range(1, base + 1), k):
        m = mask_of(c)
        if (m & pm).bit_count() >= t + s:
            masks.append(m)
    for b0 in combinations(range(1, pref + 1), k - 1):
        bm = mask_of(b0)
        for x in range(base + 1, n + 1):
            masks.append(bm | (1 << (x - 1)))
    fam = Family.from_masks(masks, k)
    if not is_t_intersecting(fam, t):
        raise AssertionError(f"union construction is not {t}-intersecting at n={n}, k={k}, t={t}, s={s}")
    return fam


def witness_sets(k: int, t: int, w: int) -> tuple[KSet, KSet]:
    """The forced-member / forbidden-pattern pair (E, D) used to locate
    prefix-poor members: E = [t-1] + odd steps + a tail block, D = [t] +
    even steps.  The defining properties |E| = k and |E intersect D| = t-1
    are asserted after construction rather than trusted.
    """
    if not 1 <= w <= k - t:
        raise ValueError(f"need 1 <= w <= k-t, got w={w}, k={k}, t={t}")
    e_els = list(range(1, t)) + list(range(t + 1, t + 2 * w + 2, 2)) + list(
        range(t + 2 * w + 2, k + w + 2)
    )
    d_els = list(range(1, t + 1)) + list(range(t + 2, t + 2 * w + 1, 2))
    e, d = KSet.of(*e_els), KSet.of(*d_els)
    assert len(e) == k, f"witness E has {len(e)} elements, expected {k}"
    assert e.intersection_size(d) == t - 1, "witness pair must meet in exactly t-1 elements"
    assert (e & d).mask | prefix_mask(t - 1) == prefix_mask(t - 1), "witness overlap must sit in [t-1]"
    return e, d
