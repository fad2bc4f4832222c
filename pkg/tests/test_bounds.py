"""Bound evaluator tests: pinned values, identities, monotonicity grids."""
from fractions import Fraction

import pytest

from shadowlab.bounds import (
    alpha3,
    alpha7,
    beta3,
    beta7,
    cor68_threshold,
    gamma,
    katona_ratio,
    prop211_check,
    prop211_offset_product_form,
    semistar_bound,
    sperner_ratio,
    star_bound,
    thm14_bound,
    thm14_threshold,
    thm210_bound,
    thm210_bound_product_form,
    thm73_threshold,
    universal_bound,
)
from shadowlab.core import binomial, exact_ratio


def test_pinned_values():
    assert sperner_ratio(4, 3, 1) == Fraction(3, 2)
    assert katona_ratio(3, 2, 2) == Fraction(3, 2)
    assert katona_ratio(2, 1, 1) == 1
    assert thm14_bound(4, 2, 1) == Fraction(3, 2)
    assert thm14_threshold(4, 2, 1) == Fraction(35, 2)
    assert thm210_bound(2, 1, 1) == Fraction(3, 2)
    assert gamma(1, 2, 1) == Fraction(3, 2)
    assert alpha3(4, 2, 1) == Fraction(1, 6)
    assert beta3(4, 2, 1) == Fraction(5, 3)
    assert semistar_bound(3, 2) == 2
    assert star_bound(3, 3) == 1
    assert star_bound(4, 2) == 6
    assert universal_bound(7, 3, 1) == 15
    assert cor68_threshold(12, 4, 1) == 1 * binomial(5, 2) + binomial(7, 2) * 12 + binomial(7, 3)
    assert prop211_check(3, 1, 0, 2, 1) == (True, True)


def test_rejections():
    with pytest.raises(ValueError):
        sperner_ratio(4, 3, 0)
    with pytest.raises(ValueError):
        sperner_ratio(4, 3, 3)
    with pytest.raises(ValueError):
        katona_ratio(3, 2, 0)
    with pytest.raises(ValueError):
        thm14_bound(4, 2, 2)
    with pytest.raises(ValueError):
        thm210_bound(2, -1, 1)
    with pytest.raises(ValueError):
        semistar_bound(3, 1)
    with pytest.raises(ValueError):
        universal_bound(7, 4, 1)
    with pytest.raises(ValueError):
        thm73_threshold(12, 4, 2, 2, 1)
    with pytest.raises(ValueError):
        prop211_check(3, 1, 2, 2, 1)


def test_katona_ratio_at_least_one_in_range():
    for k in range(2, 12):
        for t in range(1, k):
            for ell in range(k - t, k):
                assert katona_ratio(k, t, ell) >= 1


def test_immediate_shadow_special_forms():
    # the ell = k-1 case of the intersecting-shadow ratio is k/(k-t+1), and
    # the j = 1 case of the large-family bound is (k-1)/(k-t)
    for k in range(3, 15):
        for t in range(1, k):
            assert katona_ratio(k, t, k - 1) == exact_ratio(k, k - t + 1)
            if t >= 2:
                assert thm14_bound(k, t, 1) == exact_ratio(k - 1, k - t)


def test_product_form_cross_check():
    for t in range(1, 9):
        for j in range(1, t + 1):
            for w in range(0, 9):
                assert thm210_bound(t, w, j) == thm210_bound_product_form(t, w, j)


def test_offset_product_form_cross_check():
    for t in range(2, 8):
        for j in range(1, t):
            for w in range(1, 8):
                for r in range(1, w + 1):
                    lhs = exact_ratio(
                        binomial(t + 2 * w, t + w - j + r), binomial(t + 2 * w, t + w + r)
                    )
                    assert lhs == prop211_offset_product_form(t, w, j, r)


def test_ratio_monotonicity_grid():
    for t in range(2, 9):
        for j in range(1, t):
            for w in range(1, 9):
                for h in range(0, w):
                    for r in range(1, w + 1):
                        assert prop211_check(t, j, h, w, r) == (True, True)


def test_thm210_strictly_decreasing_in_width():
    # strict for j < t; at j = t the ratio is constant 1 by symmetry
    for t in range(1, 9):
        for j in range(1, t):
            values = [thm210_bound(t, w, j) for w in range(0, 9)]
            assert all(a > b for a, b in zip(values, values[1:]))
        assert all(thm210_bound(t, w, t) == 1 for w in range(0, 9))


def test_large_family_bound_identity_chain():
    # the large-family bound coincides with the shifted-parameter
    # intersecting-shadow ratio and the width-indexed coefficient
    for k in range(3, 16):
        for t in range(2, k):
            for j in range(1, t):
                b = thm14_bound(k, t, j)
                assert b == katona_ratio(k - 1, t, k - 1 - j)
                assert b == gamma(k - 1 - t, t, j)


def test_ratio_step_identity():
    # (k-j)(k-t+j) / (k(k-t)) = 1 + j(t-j) / (k(k-t)) exactly
    for k in range(3, 21):
        for t in range(2, k):
            for j in range(1, t):
                lhs = exact_ratio((k - j) * (k - t + j), k * (k - t))
                assert lhs == 1 + exact_ratio(j * (t - j), k * (k - t))


def test_gamma_reading_is_consistent():
    # at the top width the coefficient reproduces the intersecting-shadow
    # ratio, the anchor that fixes the parameterization
    for k in range(3, 14):
        for t in range(1, k):
            for j in range(1, t + 1):
                assert gamma(k - t, t, j) == exact_ratio(
                    binomial(2 * k - t, k - j), binomial(2 * k - t, k)
                )


def test_gap_coefficients_identities():
    grid = [
        (k, t, j)
        for k in range(4, 21)
        for t in range(2, k - 1)
        for j in range(1, t)
        if k - t >= 2
    ]
    for k, t, j in grid:
        a, b = alpha3(k, t, j), beta3(k, t, j)
        # exact ratio gap identity
        assert b / a - exact_ratio(k + t + 1 - j, t - j) == exact_ratio(
            t + 1 + (t - j) * j, (t - j) * (k - t - 1)
        )
        assert b / a > exact_ratio(k + t + 1 - j, t - j)
        # alpha is the step between consecutive-width coefficients
        assert a == gamma(k - t - 1, t, j) - gamma(k - t, t, j)
        assert b == gamma(k - t - 2, t + 1, j) - gamma(k - t, t, j)


def test_threshold_is_weaker_than_three_halves():
    for k in range(3, 21):
        for t in range(2, k):
            for j in range(1, t):
                assert thm14_threshold(k, t, j) < Fraction(3, 2) * binomial(2 * k - t, k)


def test_width_gap_coefficients():
    for k in range(4, 12):
        for t in range(1, k - 1):
            for j in range(1, t + 1):
                assert alpha7(k - t, k, t, j) == 0
                for w in range(1, k - t):
                    # the in-part penalty degenerates at j = t, where the
                    # width-indexed coefficient is constant
                    if j < t:
                        assert alpha7(w, k, t, j) > 0
                    else:
                        assert alpha7(w, k, t, j) == 0
                    assert beta7(w, t, j) > 0


def test_monotone_descent_with_threshold_shift():
    # gamma(w-1, t+1, j) > gamma(w, t, j) on a grid
    for t in range(1, 11):
        for j in range(1, t + 1):
            for w in range(1, 11):
                assert gamma(w - 1, t + 1, j) > gamma(w, t, j)


def test_semistar_below_star():
    for t in range(3, 12):
        for j in range(2, t):
            assert semistar_bound(t, j) < star_bound(t, j)
            # closed-form link between the two bounds
            assert semistar_bound(t, j) == exact_ratio(
                (t + 1) * binomial(t, j), (j + 1) * (t - j + 1)
            )


def test_general_threshold_polynomial_degree():
    # as a function of n the threshold is a polynomial of degree k-w-t-1:
    # finite differences of one order higher vanish, lower ones do not
    k, t, w, j = 5, 2, 1, 1
    deg = k - w - t - 1
    values = [thm73_threshold(n, k, t, w, j) for n in range(12, 12 + deg + 3)]
    diffs = values
    for _ in range(deg + 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    assert all(d == 0 for d in diffs)
    nonzero = [thm73_threshold(n, k, t, w, j) for n in range(12, 12 + deg + 2)]
    for _ in range(deg):
        nonzero = [b - a for a, b in zip(nonzero, nonzero[1:])]
    assert all(d != 0 for d in nonzero)


def test_general_threshold_growth_between_points():
    # the ratio between two n values matches the closed form exactly
    k, t, w, j = 5, 2, 1, 1
    t1 = thm73_threshold(20, k, t, w, j)
    t2 = thm73_threshold(40, k, t, w, j)
    assert t2 / t1 == exact_ratio(binomial(40 - 2 * k + t, k - w - t - 1),
                                  binomial(20 - 2 * k + t, k - w - t - 1))
