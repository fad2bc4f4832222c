"""Shadow operators on uniform families and their exact size ratios.

The j'th shadow of a k-uniform family collects every (k-j)-set contained in
some member.  The ell-shadow is the same operator addressed by target
cardinality, sigma_ell = shadow^{k-ell}.  Two computation paths exist: the
production path deletes one element at a time (deduplicating between
rounds), the oracle path generates (k-j)-subsets directly; tests cross-check
them against each other.
"""
from __future__ import annotations

from itertools import combinations

from .core import ExactRatio, Family, exact_ratio, iter_elements, mask_of


def _one_step(masks) -> set[int]:
    out = set()
    for m in masks:
        mm = m
        while mm:
            low = mm & -mm
            out.add(m ^ low)
            mm ^= low
    return out


def _shadow_masks(f: Family, j: int) -> set[int]:
    """Iterated single-element deletion; valid for 0 < j <= k."""
    masks = set(f.masks)
    for _ in range(j):
        masks = _one_step(masks)
    return masks


def shadow_j(f: Family, j: int) -> Family:
    """The j'th shadow: all (k-j)-sets contained in some member of f.

    Requires 0 < j < k.  The empty family is allowed and yields the empty
    (k-j)-uniform family.
    """
    if not 0 < j < f.k:
        raise ValueError(f"shadow depth j must satisfy 0 < j < k, got j={j}, k={f.k}")
    return Family.from_masks(_shadow_masks(f, j), f.k - j)


def shadow_j_direct(f: Family, j: int) -> Family:
    """Oracle path: enumerate the (k-j)-subsets of each member directly."""
    if not 0 < j < f.k:
        raise ValueError(f"shadow depth j must satisfy 0 < j < k, got j={j}, k={f.k}")
    out: set[int] = set()
    keep = f.k - j
    for m in f.masks:
        els = list(iter_elements(m))
        for sub in combinations(els, keep):
            out.add(mask_of(sub))
    return Family.from_masks(out, keep)


def sigma_ell(f: Family, ell: int) -> Family:
    """The ell-shadow: all ell-sets contained in some member.

    Valid for 0 <= ell < k; ell = 0 yields the single empty set (for a
    nonempty input).  For ell >= 1 this equals shadow_j(f, k - ell).
    """
    if not 0 <= ell < f.k:
        raise ValueError(f"shadow target ell must satisfy 0 <= ell < k, got ell={ell}, k={f.k}")
    if ell == 0:
        return Family.from_masks([0] if len(f) else [], 0)
    return Family.from_masks(_shadow_masks(f, f.k - ell), ell)


def shadow_ratio(f: Family, j: int) -> ExactRatio:
    """|shadow^j f| / |f| as an exact rational; f must be nonempty."""
    if len(f) == 0:
        raise ValueError("shadow ratio of the empty family is undefined")
    return exact_ratio(len(shadow_j(f, j)), len(f))
