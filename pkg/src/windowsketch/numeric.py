"""Scaled-integer fixed point used by the summing sketches.

Values are kept as non-negative integers over a common denominator
``D = k * 2**rho``. Rounded inputs live on the ``2**rho`` grid, and one
block of the window (``W/k``) is the integer ``W * 2**rho`` in raw units, so
every update is exact integer arithmetic with no drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Scale", "ScaledValue", "round_frac", "to_scaled", "ceil_log2", "width_for"]


def ceil_log2(n: int) -> int:
    """Exact ``ceil(log2(n))`` for a positive integer."""
    if n < 1:
        raise ValueError(f"ceil_log2 needs a positive integer, got {n}")
    return (n - 1).bit_length()


def width_for(n_values: int) -> int:
    """Bits needed to store one of ``n_values`` distinct values (at least 1)."""
    return max(1, ceil_log2(n_values))


@dataclass(frozen=True)
class Scale:
    """Common denominator ``k * 2**rho`` shared by a sketch's raw values."""

    rho: int
    k: int

    def __post_init__(self):
        if self.rho < 0:
            raise ValueError(f"rho must be non-negative, got {self.rho}")
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")

    @property
    def denominator(self) -> int:
        return self.k << self.rho


@dataclass(frozen=True)
class ScaledValue:
    """A non-negative rational stored as ``raw / scale.denominator``."""

    raw: int
    scale: Scale

    def __post_init__(self):
        if self.raw < 0:
            raise ValueError(f"scaled values are non-negative, got raw={self.raw}")

    def as_fraction(self) -> Fraction:
        return Fraction(self.raw, self.scale.denominator)


def round_frac(x: int, R: int, rho: int) -> int:
    """Round ``x/R`` to the nearest multiple of ``2**-rho``, ties upward.

    Returns the numerator ``n`` over ``2**rho``; ``0 <= n <= 2**rho``.
    """
    if R < 1:
        raise ValueError(f"R must be positive, got {R}")
    if rho < 0:
        raise ValueError(f"rho must be non-negative, got {rho}")
    if x < 0 or x > R:
        raise ValueError(f"value {x} outside [0, {R}]")
    # floor(x * 2^rho / R + 1/2)
    return ((x << (rho + 1)) + R) // (2 * R)


def to_scaled(n: int, scale: Scale) -> ScaledValue:
    """Lift a numerator over ``2**rho`` into the common denominator."""
    if n < 0:
        raise ValueError(f"numerator must be non-negative, got {n}")
    return ScaledValue(n * scale.k, scale)
