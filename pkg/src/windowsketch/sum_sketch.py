"""Additive-error sliding-window sums of integers in ``[0, R]``.

Each element is scaled to ``x/R`` and rounded to ``rho`` fractional bits, then
fed to a counting-style structure. Two layouts exist:

* ``LARGE_EPS``: ``k <= W`` blocks of ``s = W/k`` elements, one bit per block.
* ``SMALL_EPS``: one small cell per element; each cell records how many
  multiples of ``W/k`` the element (plus carried remainder) contributed.

:func:`derive_sum_params` picks the layout. The remainder ``y`` is held as an
integer over ``D = k * 2**rho`` (see :mod:`windowsketch.numeric`).
"""

from __future__ import annotations

import enum
import math
from array import array
from dataclasses import dataclass
from fractions import Fraction

from ._base import WindowSketchMixin
from ._bits import BitReader, BitWriter
from .count_sketch import smallest_divisor_at_least
from .numeric import Scale, ScaledValue, ceil_log2, round_frac, width_for
from .validation import ParameterError, as_fraction, check_positive_int, check_value

__all__ = ["Variant", "SumParams", "SumSketch", "derive_sum_params"]

# Above this many bits the exact power comparison in _large_eps_rho is skipped.
_EXACT_POWER_LIMIT_BITS = 1 << 22


class Variant(enum.Enum):
    LARGE_EPS = "large_eps"
    SMALL_EPS = "small_eps"


@dataclass(frozen=True)
class SumParams:
    W: int
    R: int
    epsilon: Fraction
    variant: Variant
    rho: int
    k: int
    s: int | None
    scale: Scale
    cell_width: int

    @property
    def error_bound(self) -> Fraction:
        return self.R * self.W * self.epsilon

    @property
    def block_raw(self) -> int:
        """``W/k`` in raw units, i.e. ``W * 2**rho``."""
        return self.W << self.rho

    @property
    def max_cell(self) -> int:
        if self.variant is Variant.LARGE_EPS:
            return 1
        return -(-self.k // self.W)


def _ceil_log2_rational(t: Fraction) -> int:
    """Smallest ``r >= 0`` with ``2**r >= t``."""
    if t <= 1:
        return 0
    return ceil_log2(math.ceil(t))


def _large_eps_rho(W: int, epsilon: Fraction) -> int:
    """``ceil(log2(log2(W) / epsilon))``, exact for the boundary cases."""
    if W & (W - 1) == 0:
        return _ceil_log2_rational(Fraction(W.bit_length() - 1) / epsilon)
    p, q = epsilon.numerator, epsilon.denominator
    approx = math.ceil(math.log2(math.log2(W) / float(epsilon)))
    if q * W.bit_length() > _EXACT_POWER_LIMIT_BITS:
        return max(approx, 0)
    # log2(W) is irrational here, so 2**r * p >= q*log2(W) iff
    # 2**r * p >= floor(q*log2(W)) + 1 == (W**q).bit_length().
    need = (W**q).bit_length()
    r = max(approx - 1, 0)
    while (p << r) < need:
        r += 1
    while r > 0 and (p << (r - 1)) >= need:
        r -= 1
    return r


def _blocks_for(epsilon: Fraction, rho: int) -> int:
    slack = 2 * epsilon - Fraction(1, 1 << rho)
    if slack <= 0:
        raise ParameterError(f"rho={rho} too small for epsilon={epsilon}")
    return math.ceil(1 / slack)


def derive_sum_params(W, R, epsilon) -> SumParams:
    """Choose layout, fractional bits and block count for an ``R*W*epsilon`` bound.

    The block layout is used whenever its divisor-adjusted block count fits
    in the window; otherwise the per-element layout is used.
    """
    W = check_positive_int(W, "W", minimum=2)
    R = check_positive_int(R, "R")
    epsilon = as_fraction(epsilon)
    if not 0 < epsilon <= Fraction(1, 2):
        raise ParameterError(f"epsilon must lie in (0, 1/2], got {epsilon}")
    if epsilon < Fraction(1, 2 * R * W):
        raise ParameterError(
            f"exact summing required: epsilon={epsilon} < 1/(2RW)=1/{2 * R * W}"
        )

    rho = _large_eps_rho(W, epsilon)
    k = smallest_divisor_at_least(W, _blocks_for(epsilon, rho))
    if k is not None:
        return SumParams(
            W=W, R=R, epsilon=epsilon, variant=Variant.LARGE_EPS, rho=rho, k=k,
            s=W // k, scale=Scale(rho, k), cell_width=1,
        )

    rho = _ceil_log2_rational(W / epsilon)
    k = _blocks_for(epsilon, rho)
    return SumParams(
        W=W, R=R, epsilon=epsilon, variant=Variant.SMALL_EPS, rho=rho, k=k, s=None,
        scale=Scale(rho, k), cell_width=width_for(-(-k // W) + 1),
    )


def _cell_array(size: int, max_value: int):
    for code in ("B", "H", "L", "Q"):
        if max_value < 1 << (8 * array(code).itemsize):
            return array(code, bytes(size * array(code).itemsize))
    raise OverflowError(f"cell values up to {max_value} do not fit a machine word")


class SumSketch(WindowSketchMixin):
    """Sliding-window sum with additive error at most ``value_range * window * epsilon``.

    Parameters
    ----------
    window : int
        Window length ``W`` (at least 2).
    epsilon : Fraction, str or number
    value_range : int
        Elements are integers in ``[0, value_range]``.

    Attributes
    ----------
    params : SumParams
    y : int
        Remainder numerator over ``params.scale.denominator``.
    cells : bytearray or array.array
        Block bits (large epsilon) or per-element multiples (small epsilon).
    i, B, m : int
        Oldest-cell index, sum of cells, offset inside the current block
        (always 0 for the per-element layout).
    """

    def __init__(self, window=64, epsilon="1/8", value_range=1):
        self.window = window
        self.epsilon = epsilon
        self.value_range = value_range
        self.reset()

    def reset(self):
        p = self.params = derive_sum_params(self.window, self.value_range, self.epsilon)
        self.query_scale = 2 * p.scale.denominator
        self._large = p.variant is Variant.LARGE_EPS
        self._thr = p.block_raw
        self._ncells = p.k if self._large else p.W
        self.y = 0
        if self._large:
            self.cells = bytearray(p.k)
        else:
            self.cells = _cell_array(p.W, p.max_cell)
        self.i = 0
        self.B = 0
        self.m = 0
        return self

    @property
    def variant(self) -> Variant:
        return self.params.variant

    @property
    def error_bound(self) -> Fraction:
        return self.params.error_bound

    @property
    def remainder(self) -> ScaledValue:
        return ScaledValue(self.y, self.params.scale)

    def scaled_input(self, x: int) -> int:
        """Rounded ``x/R`` as a numerator over ``2**rho``."""
        return round_frac(x, self.params.R, self.params.rho)

    def add(self, x) -> None:
        self.add_unchecked(check_value(x, self.params.R))

    def add_unchecked(self, x: int) -> None:
        p = self.params
        R = p.R
        xr = (((x << (p.rho + 1)) + R) // (2 * R)) * p.k
        thr = self._thr
        c = self.cells
        i = self.i
        if self._large:
            if self.m == p.s - 1:
                B = self.B - c[i]
                t = self.y + xr
                if t >= thr:
                    c[i] = 1
                    self.y = t - thr
                    B += 1
                else:
                    c[i] = 0
                    self.y = t
                self.B = B
                self.m = 0
                self.i = i + 1 if i + 1 < p.k else 0
            else:
                self.y += xr
                self.m += 1
        else:
            t = self.y + xr
            v = t // thr
            self.B += v - c[i]
            c[i] = v
            self.y = t - v * thr
            self.i = i + 1 if i + 1 < p.W else 0

    def query_scaled(self) -> int:
        """The estimate times ``2*D``, as an integer."""
        p = self.params
        thr = self._thr
        inner = 2 * thr * self.B + 2 * self.y - thr
        if self.m:
            inner -= 2 * self.m * self.cells[self.i] * p.scale.denominator
        return p.R * inner

    # -- memory accounting and serialization ---------------------------------

    def _fraction_y_width(self) -> int:
        p = self.params
        if self._large:
            return width_for(2 * p.s) + p.rho
        return p.rho

    def _raw_y_width(self) -> int:
        # y/D < 2s (block layout) or y/D < W/k (per-element layout)
        limit = 2 * self._thr if self._large else self._thr
        return max(1, (limit - 1).bit_length())

    def denominator_overhead_bits(self) -> int:
        """Extra bits the exact common denominator costs over ``rho`` fractional bits."""
        return max(0, self._raw_y_width() - self._fraction_y_width())

    def _counter_widths(self):
        p = self.params
        if self._large:
            return [("m", width_for(p.s)), ("i", width_for(p.k)), ("B", width_for(p.k + 1))]
        return [("i", width_for(p.W)), ("B", width_for(p.k + 1))]

    def packed_bits(self) -> int:
        """State size in bits with ``y`` counted at ``rho`` fractional bits."""
        cells = self._ncells * self.params.cell_width
        return cells + self._fraction_y_width() + sum(w for _, w in self._counter_widths())

    def serialized_bits(self) -> int:
        return self.packed_bits() + self.denominator_overhead_bits()

    def to_bytes(self) -> bytes:
        """Pack ``(cells, y, m, i, B)`` little-endian; ``m`` is omitted per-element."""
        w = BitWriter()
        cw = self.params.cell_width
        for c in self.cells:
            w.write(c, cw)
        w.write(self.y, self._fraction_y_width() + self.denominator_overhead_bits())
        for name, width in self._counter_widths():
            w.write(getattr(self, name), width)
        return w.to_bytes()

    @classmethod
    def from_bytes(cls, data: bytes, window, epsilon, value_range) -> "SumSketch":
        sketch = cls(window=window, epsilon=epsilon, value_range=value_range)
        p = sketch.params
        r = BitReader(data, sketch.serialized_bits())
        for j in range(sketch._ncells):
            sketch.cells[j] = r.read(p.cell_width)
        sketch.y = r.read(sketch._fraction_y_width() + sketch.denominator_overhead_bits())
        for name, width in sketch._counter_widths():
            setattr(sketch, name, r.read(width))
        limit = 2 * sketch._thr if sketch._large else sketch._thr
        if (
            sketch.B != sum(sketch.cells)
            or max(sketch.cells) > p.max_cell
            or sketch.y >= limit
            or sketch.i >= sketch._ncells
            or (sketch._large and sketch.m >= p.s)
        ):
            raise ValueError("serialized state violates sketch invariants")
        return sketch
