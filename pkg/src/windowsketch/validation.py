"""Input validation helpers shared by the sketches, oracle and CLI."""

from __future__ import annotations

import numbers
from fractions import Fraction

import numpy as np

__all__ = [
    "ParameterError",
    "as_fraction",
    "check_positive_int",
    "check_value",
    "check_stream",
]


class ParameterError(ValueError):
    """Raised when (W, epsilon, R) fall outside what an algorithm supports."""


def as_fraction(value) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Strings may be ``"p/q"`` or a decimal literal (read as an exact base-10
    rational). Floats go through their shortest ``repr`` so ``0.1`` becomes
    ``1/10`` rather than its binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not valid rationals")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {value!r} as a rational") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def check_positive_int(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_value(x, R: int) -> int:
    """Validate one stream element against the range ``[0, R]``."""
    if isinstance(x, numbers.Integral):
        x = int(x)
    elif isinstance(x, numbers.Real) and float(x).is_integer():
        x = int(x)
    else:
        raise ValueError(f"stream elements must be integers, got {x!r}")
    if x < 0 or x > R:
        raise ValueError(f"stream element {x} outside [0, {R}]")
    return x


def check_stream(X, R: int) -> list[int]:
    """Return ``X`` as a list of Python ints in ``[0, R]``.

    Accepts any iterable or a 1-d (or single-column 2-d) array, the latter so
    sketches can sit at the end of a pipeline that emits ``(n, 1)`` arrays.
    """
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        elif X.ndim != 1:
            raise ValueError(f"expected a 1-d stream, got shape {X.shape}")
        if X.size and not np.issubdtype(X.dtype, np.integer):
            if not np.all(np.mod(X, 1) == 0):
                raise ValueError("stream elements must be integers")
        values = [int(v) for v in X.tolist()]
        if values and (min(values) < 0 or max(values) > R):
            bad = next(v for v in values if v < 0 or v > R)
            raise ValueError(f"stream element {bad} outside [0, {R}]")
        return values
    return [check_value(x, R) for x in X]
