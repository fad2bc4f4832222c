"""shadowlab: exact calculus and brute-force verification for set-family
shadow bounds.

The package is organized around eight concerns: `core` (bit-vector sets,
families, exact rationals), `shadow` (shadow operators), `shift`
(compression to shifted families), `structure` (intersection structure:
widths, tails, restricted shadows, stars, bases), `canonical` (named family
constructors), `bounds` (closed-form bound evaluators), `verify` (oracles,
generators, theorem checkers), and `cli` (command-line front end).
"""

from .core import (
    CapacityError,
    ExactRatio,
    Family,
    KSet,
    Params,
    SetSystem,
    WORD_BITS,
    binomial,
    enumerate_ksubsets,
    exact_ratio,
    prefix_intersection_size,
    shifting_order_leq,
)
from .shadow import shadow_j, shadow_j_direct, shadow_ratio, sigma_ell
from .shift import is_shifted, shift_closure, shift_ij

__all__ = [
    "CapacityError",
    "ExactRatio",
    "Family",
    "KSet",
    "Params",
    "SetSystem",
    "WORD_BITS",
    "binomial",
    "enumerate_ksubsets",
    "exact_ratio",
    "prefix_intersection_size",
    "shifting_order_leq",
    "shadow_j",
    "shadow_j_direct",
    "shadow_ratio",
    "sigma_ell",
    "is_shifted",
    "shift_closure",
    "shift_ij",
]

__version__ = "0.1.0"
