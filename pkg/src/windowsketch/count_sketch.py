"""Additive-error counting of ones in a sliding window of bits.

The window of ``W`` bits is cut into ``k`` blocks of ``s = W/k`` positions,
each summarized by a single bit. Ones not yet committed to a block are kept
in a remainder counter ``y`` and carried into the next block, which keeps the
error within ``W * epsilon`` at every step while add and query stay O(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from ._base import WindowSketchMixin
from ._bits import BitReader, BitWriter
from .numeric import width_for
from .validation import ParameterError, as_fraction, check_positive_int

__all__ = ["CountParams", "CountSketch", "derive_count_params", "smallest_divisor_at_least"]


def smallest_divisor_at_least(n: int, lower: int) -> int | None:
    """Smallest divisor of ``n`` that is ``>= lower``, or None if ``lower > n``."""
    if lower > n:
        return None
    lower = max(lower, 1)
    best = n
    d = 1
    while d * d <= n:
        if n % d == 0:
            for cand in (d, n // d):
                if lower <= cand < best:
                    best = cand
        d += 1
    return best


@dataclass(frozen=True)
class CountParams:
    W: int
    epsilon: Fraction
    k: int
    s: int

    def __post_init__(self):
        if self.k * self.s != self.W:
            raise ParameterError(f"k*s must equal W ({self.k}*{self.s} != {self.W})")
        if not 1 <= self.k <= self.W:
            raise ParameterError(f"k={self.k} outside [1, W={self.W}]")
        if self.k < ceil(1 / (2 * self.epsilon)):
            raise ParameterError(f"k={self.k} too small for epsilon={self.epsilon}")

    @property
    def error_bound(self) -> Fraction:
        return self.W * self.epsilon


def derive_count_params(W, epsilon) -> CountParams:
    """Pick the block count for a ``W*epsilon`` additive guarantee.

    ``k`` starts at ``ceil(1/(2 epsilon))`` and is rounded up to the next
    divisor of ``W``; a larger ``k`` only shrinks the half-block bias.
    """
    W = check_positive_int(W, "W")
    epsilon = as_fraction(epsilon)
    if not 0 < epsilon <= Fraction(1, 2):
        raise ParameterError(f"epsilon must lie in (0, 1/2], got {epsilon}")
    k0 = ceil(1 / (2 * epsilon))
    k = smallest_divisor_at_least(W, k0)
    if k is None:
        raise ParameterError(
            f"epsilon too small for block algorithm: need {k0} blocks but W={W}"
        )
    return CountParams(W=W, epsilon=epsilon, k=k, s=W // k)


class CountSketch(WindowSketchMixin):
    """Sliding-window count of ones with additive error at most ``window * epsilon``.

    Parameters
    ----------
    window : int
        Window length ``W``.
    epsilon : Fraction, str or number
        Relative additive error, in ``(0, 1/2]``.

    Attributes
    ----------
    params : CountParams
    y : int
        Ones seen but not yet committed to a block.
    b : bytearray
        One mark per block, used cyclically.
    i : int
        Index of the oldest block in ``b``.
    B : int
        Number of marked blocks.
    m : int
        Offset inside the current block.
    """

    value_range = 1
    query_scale = 2

    def __init__(self, window=64, epsilon="1/8"):
        self.window = window
        self.epsilon = epsilon
        self.reset()

    def reset(self):
        self.params = derive_count_params(self.window, self.epsilon)
        self.y = 0
        self.b = bytearray(self.params.k)
        self.i = 0
        self.B = 0
        self.m = 0
        return self

    @property
    def error_bound(self) -> Fraction:
        return self.params.error_bound

    def add(self, x) -> None:
        if x != 0 and x != 1:
            raise ValueError(f"counting sketch takes bits, got {x!r}")
        self.add_unchecked(int(x))

    def add_unchecked(self, x: int) -> None:
        s = self.params.s
        if self.m == s - 1:
            i = self.i
            b = self.b
            B = self.B - b[i]
            y = self.y + x
            if y >= s:
                b[i] = 1
                self.y = y - s
                B += 1
            else:
                b[i] = 0
                self.y = y
            self.B = B
            self.m = 0
            self.i = i + 1 if i + 1 < self.params.k else 0
        else:
            self.y += x
            self.m += 1

    def query_scaled(self) -> int:
        """Twice the estimate ``s*B + y - s/2 - m*b_i``, as an integer."""
        s = self.params.s
        return 2 * (s * self.B + self.y - self.m * self.b[self.i]) - s

    def packed_bits(self) -> int:
        p = self.params
        return p.k + sum(w for _, w in self._field_widths())

    def _field_widths(self):
        p = self.params
        return [
            ("y", width_for(2 * p.s)),
            ("m", width_for(p.s)),
            ("i", width_for(p.k)),
            ("B", width_for(p.k + 1)),
        ]

    def to_bytes(self) -> bytes:
        """Pack ``(b, y, m, i, B)`` little-endian at their invariant widths."""
        w = BitWriter()
        for bit in self.b:
            w.write(bit, 1)
        for name, width in self._field_widths():
            w.write(getattr(self, name), width)
        return w.to_bytes()

    @classmethod
    def from_bytes(cls, data: bytes, window, epsilon) -> "CountSketch":
        sketch = cls(window=window, epsilon=epsilon)
        r = BitReader(data, sketch.packed_bits())
        sketch.b = bytearray(r.read(1) for _ in range(sketch.params.k))
        for name, width in sketch._field_widths():
            setattr(sketch, name, r.read(width))
        p = sketch.params
        if (
            sketch.B != sum(sketch.b)
            or sketch.y >= 2 * p.s
            or sketch.m >= p.s
            or sketch.i >= p.k
        ):
            raise ValueError("serialized state violates sketch invariants")
        return sketch
