"""Exact evaluation of every closed-form shadow bound, threshold, coefficient.

Every function returns an exact rational or integer and rejects parameters
outside its stated range instead of extrapolating.  The catalog ids
(thm14, thm210, cor68, ...) refer to this library's own table of verified
statements, documented in the README.
"""
from __future__ import annotations

from .core import ExactRatio, binomial, exact_ratio


def sperner_ratio(n: int, k: int, j: int) -> ExactRatio:
    """Baseline layer-density bound C(n, k-j) / C(n, k)."""
    if not 0 < j < k <= n:
        raise ValueError(f"need 0 < j < k <= n, got n={n}, k={k}, j={j}")
    return exact_ratio(binomial(n, k - j), binomial(n, k))


def katona_ratio(k: int, t: int, ell: int) -> ExactRatio:
    """Intersecting-shadow bound C(2k-t, ell) / C(2k-t, k) for the ell-shadow
    of a t-intersecting family; valid for k-t <= ell < k.
    """
    if not (1 <= t <= k):
        raise ValueError(f"need 1 <= t <= k, got k={k}, t={t}")
    if not k - t <= ell < k:
        raise ValueError(f"need k-t <= ell < k, got ell={ell}, k={k}, t={t}")
    return exact_ratio(binomial(2 * k - t, ell), binomial(2 * k - t, k))


def thm14_bound(k: int, t: int, j: int) -> ExactRatio:
    """Large-family shadow-ratio bound C(2(k-1)-t, k-1-j) / C(2(k-1)-t, k-1)."""
    if not 1 <= j < t < k:
        raise ValueError(f"need 1 <= j < t < k, got k={k}, t={t}, j={j}")
    return exact_ratio(binomial(2 * (k - 1) - t, k - 1 - j), binomial(2 * (k - 1) - t, k - 1))


def thm14_threshold(k: int, t: int, j: int) -> ExactRatio:
    """Size hypothesis C(2k-t, k) (1 + (t-j)/(k+t+1-j)) for the bound above."""
    if not 1 <= j < t < k:
        raise ValueError(f"need 1 <= j < t < k, got k={k}, t={t}, j={j}")
    return binomial(2 * k - t, k) * (1 + exact_ratio(t - j, k + t + 1 - j))


def thm210_bound(t: int, w: int, j: int) -> ExactRatio:
    """Restricted-shadow bound C(t+2w, t+w-j) / C(t+2w, t+w) at width w."""
    if not 0 < j <= t:
        raise ValueError(f"need 0 < j <= t, got t={t}, j={j}")
    if w < 0:
        raise ValueError(f"need w >= 0, got w={w}")
    return exact_ratio(binomial(t + 2 * w, t + w - j), binomial(t + 2 * w, t + w))


def thm210_bound_product_form(t: int, w: int, j: int) -> ExactRatio:
    """Factorial-free product form prod_{1<=i<=j} (1 + (t-j)/(w+i)).

    Independent re-derivation of thm210_bound used for cross-checking.
    """
    if not 0 < j <= t:
        raise ValueError(f"need 0 < j <= t, got t={t}, j={j}")
    if w < 0:
        raise ValueError(f"need w >= 0, got w={w}")
    out = exact_ratio(1, 1)
    for i in range(1, j + 1):
        out *= 1 + exact_ratio(t - j, w + i)
    return out


def gamma(w: int, t: int, j: int) -> ExactRatio:
    """Width-indexed shadow-ratio coefficient; equals thm210_bound(t, w, j).

    At w = k-t it reproduces the intersecting-shadow ratio
    C(2k-t, k-j) / C(2k-t, k).
    """
    return thm210_bound(t, w, j)


def alpha3(k: int, t: int, j: int) -> ExactRatio:
    """Gap coefficient (j(t-j) / k(k-t)) C(2k-t, k-j) / C(2k-t, k)."""
    if not 1 <= j < t < k:
        raise ValueError(f"need 1 <= j < t < k, got k={k}, t={t}, j={j}")
    scale = exact_ratio(binomial(2 * k - t, k - j), binomial(2 * k - t, k))
    return exact_ratio(j * (t - j), k * (k - t)) * scale


def beta3(k: int, t: int, j: int) -> ExactRatio:
    """Companion gap coefficient with numerator
    j(k^2 - t^2 - t) - j^2 (k - 2t - 1) - j^3 over k(k-t)(k-t-1).
    """
    if not 1 <= j < t < k:
        raise ValueError(f"need 1 <= j < t < k, got k={k}, t={t}, j={j}")
    if k - t < 2:
        raise ValueError(f"need k - t >= 2, got k={k}, t={t}")
    scale = exact_ratio(binomial(2 * k - t, k - j), binomial(2 * k - t, k))
    num = j * (k * k - t * t - t) - j * j * (k - 2 * t - 1) - j ** 3
    return exact_ratio(num, k * (k - t) * (k - t - 1)) * scale


def alpha7(w: int, k: int, t: int, j: int) -> ExactRatio:
    """gamma(w) - gamma(k-t): the in-part penalty at width w."""
    if not 1 <= w <= k - t:
        raise ValueError(f"need 1 <= w <= k-t, got w={w}, k={k}, t={t}")
    return gamma(w, t, j) - gamma(k - t, t, j)


def beta7(w: int, t: int, j: int) -> ExactRatio:
    """gamma(w-1, t+1) - gamma(w, t): the out-part surplus at width w."""
    if w < 1:
        raise ValueError(f"need w >= 1, got w={w}")
    return gamma(w - 1, t + 1, j) - gamma(w, t, j)


def semistar_bound(t: int, j: int) -> ExactRatio:
    """Shadow-ratio bound C(t+2, j+1) / (t+2) for t-intersecting semistars."""
    if not 1 < j < t:
        raise ValueError(f"need 1 < j < t, got t={t}, j={j}")
    return exact_ratio(binomial(t + 2, j + 1), t + 2)


def star_bound(t: int, j: int) -> ExactRatio:
    """Shadow-ratio bound C(t, j) for subfamilies of a full t-star."""
    if not 0 < j <= t:
        raise ValueError(f"need 0 < j <= t, got t={t}, j={j}")
    return exact_ratio(binomial(t, j), 1)


def universal_bound(n: int, k: int, t: int) -> int:
    """Universal size bound C(n-1, k-t) for t-intersecting families, n > 2k-t."""
    if not n > 2 * k - t:
        raise ValueError(f"need n > 2k-t, got n={n}, k={k}, t={t}")
    return binomial(n - 1, k - t)


def cor68_threshold(n: int, k: int, t: int) -> int:
    """Size threshold t C(n-2k+t, k-t-1) + sum over t+2 <= ell <= k of
    C(2k-t, ell-t) C(n, k-ell), beyond which non-trivially-star families
    obey the strict star shadow bound.
    """
    if not t + 2 <= k - t + 1:
        raise ValueError(f"need t+2 <= k-t+1, got k={k}, t={t}")
    if n < 2 * k - t:
        raise ValueError(f"need n >= 2k-t, got n={n}, k={k}, t={t}")
    total = t * binomial(n - 2 * k + t, k - t - 1)
    for ell in range(t + 2, k + 1):
        total += binomial(2 * k - t, ell - t) * binomial(n, k - ell)
    return total


def thm73_threshold(n: int, k: int, t: int, w: int, j: int) -> ExactRatio:
    """Finite-n surrogate of the general size threshold
    ((alpha + beta)/alpha) C(2k-t, w+1) C(n-2k+t, k-w-t-1).

    The vanishing correction term of the asymptotic statement is dropped, so
    this value is a lower surrogate; verification only treats families
    exceeding twice this value.
    """
    if not 1 <= w < k - t:
        raise ValueError(f"need 1 <= w < k-t, got w={w}, k={k}, t={t}")
    if not 1 <= j < t:
        raise ValueError(f"need 1 <= j < t, got j={j}, t={t}")
    if n < 2 * k - t:
        raise ValueError(f"need n >= 2k-t, got n={n}, k={k}, t={t}")
    a = alpha7(w, k, t, j)
    b = beta7(w, t, j)
    return (a + b) / a * binomial(2 * k - t, w + 1) * binomial(n - 2 * k + t, k - w - t - 1)


def prop211_check(t: int, j: int, h: int, w: int, r: int) -> tuple[bool, bool]:
    """Exact evaluation of the two ratio monotonicity inequalities:
    (i) the centered ratio at h strictly exceeds the one at w > h, and
    (ii) the r-offset ratio at w strictly exceeds the centered one.
    """
    if not 0 < j < t:
        raise ValueError(f"need 0 < j < t, got t={t}, j={j}")
    if not 0 <= h < w:
        raise ValueError(f"need 0 <= h < w, got h={h}, w={w}")
    if not 1 <= r <= w:
        raise ValueError(f"need 1 <= r <= w, got r={r}, w={w}")
    centered_h = exact_ratio(binomial(t + 2 * h, t + h - j), binomial(t + 2 * h, t + h))
    centered_w = exact_ratio(binomial(t + 2 * w, t + w - j), binomial(t + 2 * w, t + w))
    offset_w = exact_ratio(binomial(t + 2 * w, t + w - j + r), binomial(t + 2 * w, t + w + r))
    return centered_h > centered_w, offset_w > centered_w


def prop211_offset_product_form(t: int, w: int, j: int, r: int) -> ExactRatio:
    """Factorial-free form prod_{1<=i<=j} (t-j+w+i+r) / (w+i-r) of the
    offset ratio in prop211_check, for cross-checking.
    """
    out = exact_ratio(1, 1)
    for i in range(1, j + 1):
        out *= exact_ratio(t - j + w + i + r, w + i - r)
    return out
