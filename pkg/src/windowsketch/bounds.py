"""Memory bounds, in bits, for additive sliding-window counting and summing.

Formulas are evaluated in exact rationals; ``log2`` is the only irrational
step and is returned as a float.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .validation import ParameterError, as_fraction, check_positive_int

__all__ = [
    "block_language_bound",
    "count_lower_bound",
    "sum_lower_bound",
    "count_upper_theory",
    "sum_upper_theory",
    "succinct_bound",
    "floor_log2",
]


def floor_log2(n: int) -> int:
    return n.bit_length() - 1


def block_language_bound(W, epsilon) -> int:
    """``floor(W / floor(2*W*epsilon + 1))``: bits forced by the block language."""
    W = check_positive_int(W, "W")
    epsilon = as_fraction(epsilon)
    return W // math.floor(2 * W * epsilon + 1)


def count_lower_bound(W, epsilon) -> int:
    """Deterministic lower bound ``max(floor(1/(2eps + 1/W)), floor(log2 W))``."""
    W = check_positive_int(W, "W", minimum=2)
    epsilon = as_fraction(epsilon)
    if not 0 < epsilon <= Fraction(1, 4):
        raise ParameterError(f"lower bound needs 0 < epsilon <= 1/4, got {epsilon}")
    return max(math.floor(1 / (2 * epsilon + Fraction(1, W))), floor_log2(W))


def sum_lower_bound(W, R, epsilon) -> float:
    """Lower bound for summing; the per-element regime applies when ``eps <= 1/(2W)``."""
    W = check_positive_int(W, "W", minimum=2)
    check_positive_int(R, "R")
    epsilon = as_fraction(epsilon)
    if epsilon <= 0:
        raise ParameterError(f"epsilon must be positive, got {epsilon}")
    if epsilon <= Fraction(1, 2 * W):
        letters = math.floor(1 / (4 * W * epsilon) + 1)
        return W * math.log2(letters)
    return float(count_lower_bound(W, min(epsilon, Fraction(1, 4))))


def count_upper_theory(W, epsilon) -> float:
    """``1/(2 eps) + 2 log2 W + 6``: the counting sketch's state size with constants."""
    W = check_positive_int(W, "W")
    epsilon = as_fraction(epsilon)
    return float(1 / (2 * epsilon)) + 2 * math.log2(W) + 6


def sum_upper_theory(W, epsilon) -> float:
    """Leading term ``1/(2 eps) + 2 log2 W`` of the block summing sketch (lower-order factor dropped)."""
    W = check_positive_int(W, "W")
    epsilon = as_fraction(epsilon)
    return float(1 / (2 * epsilon)) + 2 * math.log2(W)


def succinct_bound(W, epsilon) -> float:
    """``W * log2(1/(2 W eps) + 1)``, the per-element sketch's leading term."""
    W = check_positive_int(W, "W")
    epsilon = as_fraction(epsilon)
    if not 0 < epsilon <= Fraction(1, 2 * W):
        raise ParameterError(f"succinct regime needs 0 < epsilon <= 1/(2W), got {epsilon}")
    return W * math.log2(1 / (2 * W * epsilon) + 1)
