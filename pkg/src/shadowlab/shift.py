"""The compression (shifting) operation, shiftedness testing, shift closure.

The (i, j)-shift replaces element j by element i in every member where the
replacement is not blocked by an existing member.  Repeated application in a
fixed sweep order drives any family to a shifted fixpoint; the fixpoint can
depend on application order in general, so the sweep order here is part of
the contract: pairs (i, j), i < j, in lexicographic order, restarting from
the first pair after any change.
"""
from __future__ import annotations

from .core import Family, KSet, iter_elements


def is_shifted(f: Family) -> bool:
    """True iff f is downward closed under the componentwise element order.

    Checks only immediate covers (replace a by a-1 where a-1 is absent);
    the full downset condition follows by transitivity.
    """
    mask_set = set(f.masks)
    for m in f.masks:
        for a in iter_elements(m):
            if a == 1:
                continue
            below = 1 << (a - 2)
            if m & below:
                continue
            if (m ^ (1 << (a - 1))) | below not in mask_set:
                return False
    return True


def _shift_masks(masks: frozenset[int] | set[int], i: int, jj: int) -> set[int] | None:
    """Apply the (i, jj)-shift to a mask set; None when nothing moves."""
    bit_i = 1 << (i - 1)
    bit_j = 1 << (jj - 1)
    moved = {}
    for m in masks:
        if m & bit_j and not m & bit_i:
            swapped = (m ^ bit_j) | bit_i
            if swapped not in masks:
                moved[m] = swapped
    if not moved:
        return None
    out = set(masks)
    for old, new in moved.items():
        out.discard(old)
        out.add(new)
    return out


def shift_ij(f: Family, i: int, jj: int) -> Family:
    """One compression step: move element jj down to i where unobstructed.

    Every member containing jj but not i whose swapped image is absent from
    f gets replaced by that image; everything else is kept.  The family size
    never changes.
    """
    if not 1 <= i < jj:
        raise ValueError(f"shift needs 1 <= i < jj, got i={i}, jj={jj}")
    shifted = _shift_masks(frozenset(f.masks), i, jj)
    if shifted is None:
        return f
    return Family.from_masks(shifted, f.k)


def _potential(masks) -> int:
    return sum(sum(iter_elements(m)) for m in masks)


def shift_closure(f: Family) -> Family:
    """Canonical shift fixpoint: sweep (i, jj) lexicographically, restart on
    any change, stop when a full sweep is silent.

    The result is shifted and has the same cardinality as the input.  The
    member-weight potential strictly decreases with every effective step,
    which guarantees termination; the decrease is asserted.
    """
    masks = set(f.masks)
    pot = _potential(masks)
    while True:
        top = max((m.bit_length() for m in masks), default=0)
        union = 0
        for m in masks:
            union |= m
        changed = False
        for i in range(1, top):
            for jj in range(i + 1, top + 1):
                if not union >> (jj - 1) & 1:
                    continue
                nxt = _shift_masks(masks, i, jj)
                if nxt is not None:
                    new_pot = _potential(nxt)
                    assert new_pot < pot, "shift step failed to decrease the weight potential"
                    masks, pot = nxt, new_pot
                    changed = True
                    break
            if changed:
                break
        if not changed:
            return Family.from_masks(masks, f.k)
