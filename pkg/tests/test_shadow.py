"""Shadow operator tests: examples, layer-density extremality, identities."""
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from shadowlab.core import Family, binomial, enumerate_ksubsets, exact_ratio, mask_of
from shadowlab.shadow import shadow_j, shadow_j_direct, shadow_ratio, sigma_ell


def masks_strategy(n, k, max_size=10):
    pool = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    return st.sets(st.sampled_from(pool), min_size=0, max_size=min(max_size, len(pool)))


def test_shadow_examples():
    single = Family.from_elements([[1, 2, 3]])
    assert {m.elements for m in shadow_j(single, 1)} == {(1, 2), (1, 3), (2, 3)}
    layer = enumerate_ksubsets(4, 3)
    assert shadow_j(layer, 1) == enumerate_ksubsets(4, 2)
    assert (len(layer), len(shadow_j(layer, 1))) == (4, 6)
    two = Family.from_elements([[1, 2, 3], [1, 2, 4]])
    assert {m.elements for m in shadow_j(two, 1)} == {(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)}


def test_sigma_examples():
    triangle = Family.from_elements([[1, 2], [1, 3], [2, 3]])
    assert {m.elements for m in sigma_ell(triangle, 1)} == {(1,), (2,), (3,)}
    with pytest.raises(ValueError):
        sigma_ell(triangle, 2)
    zero = sigma_ell(Family.from_elements([[1, 2, 3]]), 0)
    assert len(zero) == 1 and zero.k == 0


def test_shadow_ratio_examples():
    assert shadow_ratio(enumerate_ksubsets(4, 3), 1) == exact_ratio(3, 2)
    assert shadow_ratio(enumerate_ksubsets(3, 2), 1) == 1
    assert shadow_ratio(Family.from_elements([[1, 2, 3]]), 1) == 3


def test_shadow_contract_violations():
    f = Family.from_elements([[1, 2, 3]])
    with pytest.raises(ValueError):
        shadow_j(f, 3)
    with pytest.raises(ValueError):
        shadow_j(f, 0)
    with pytest.raises(ValueError):
        shadow_ratio(Family((), k=3), 1)


def test_empty_family_shadow_is_empty():
    empty = Family((), k=4)
    assert len(shadow_j(empty, 2)) == 0
    assert shadow_j(empty, 2).k == 2
    assert len(sigma_ell(empty, 0)) == 0


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (4, 3)])
def test_layer_density_extremal_over_all_subfamilies(n, k):
    # every nonempty subfamily obeys the layer-density bound, with equality
    # exactly at the full layer; exhaustive over all 2^C(n,k) - 1 subfamilies
    layer = [m.mask for m in enumerate_ksubsets(n, k)]
    for j in range(1, k):
        num, den = binomial(n, k - j), binomial(n, k)
        for pick in range(1, 1 << len(layer)):
            masks = [layer[i] for i in range(len(layer)) if pick >> i & 1]
            fam = Family.from_masks(masks, k)
            lhs = len(shadow_j(fam, j)) * den
            rhs = len(fam) * num
            assert lhs >= rhs
            if lhs == rhs:
                assert len(fam) == len(layer)


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_monotone_and_identities(data):
    n, k = 6, 3
    masks = data.draw(masks_strategy(n, k, max_size=8))
    sub = data.draw(st.sets(st.sampled_from(sorted(masks)), max_size=len(masks))) if masks else set()
    f = Family.from_masks(masks, k)
    g = Family.from_masks(sub, k)
    for j in range(1, k):
        # monotone in the family
        assert set(shadow_j(g, j).masks) <= set(shadow_j(f, j).masks)
        # the two computation paths agree
        assert shadow_j(f, j) == shadow_j_direct(f, j)
    for ell in range(1, k):
        assert sigma_ell(f, ell) == shadow_j(f, k - ell)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_shadow_composition(data):
    n, k = 7, 4
    masks = data.draw(masks_strategy(n, k, max_size=7))
    f = Family.from_masks(masks, k)
    for a in range(1, k):
        for b in range(1, k - a):
            assert shadow_j(shadow_j(f, a), b) == shadow_j(f, a + b)


def test_shadow_of_random_families_matches_direct_path():
    rng = random.Random(11)
    pool = [m.mask for m in enumerate_ksubsets(8, 4)]
    for _ in range(40):
        fam = Family.from_masks(rng.sample(pool, rng.randint(1, 12)), 4)
        for j in range(1, 4):
            assert shadow_j(fam, j) == shadow_j_direct(fam, j)
