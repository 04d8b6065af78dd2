"""Workload generators and the one-integer-per-line stream format.

Random streams use :class:`random.Random` (MT19937) seeded with the given
integer: a Bernoulli bit is ``rng.random() < p`` and a uniform value is
``rng.randint(0, R)``.

The adversarial generators emit words of the languages behind the memory
lower bounds: runs of ``floor(2*W*eps + 1)`` equal bits for counting, and
multiples of ``floor(2*R*W*eps + 1)`` for summing. Any two distinct words
must leave an accurate sketch in distinct states, which makes them good
stress inputs.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterable, Iterator
from fractions import Fraction

from .validation import as_fraction, check_positive_int

__all__ = [
    "StreamParseError",
    "block_size",
    "block_count",
    "gen_block_language",
    "sum_letter_step",
    "sum_letter_count",
    "gen_sum_language",
    "gen_bernoulli",
    "gen_uniform",
    "gen_constant",
    "parse_stream",
    "format_stream",
]


class StreamParseError(ValueError):
    def __init__(self, line: int, text: str, reason: str = "not a non-negative integer"):
        self.line = line
        self.text = text
        super().__init__(f"line {line}: {reason}: {text!r}")


def block_size(W: int, epsilon) -> int:
    return math.floor(2 * W * as_fraction(epsilon) + 1)


def block_count(W: int, epsilon) -> int:
    return W // block_size(W, epsilon)


def gen_block_language(W, epsilon, pattern) -> list[int]:
    """Expand one bit per block of ``pattern`` into a run of ``block_size`` bits."""
    W = check_positive_int(W, "W")
    pattern = list(pattern)
    z = block_count(W, epsilon)
    if len(pattern) != z:
        raise ValueError(f"pattern must have {z} blocks, got {len(pattern)}")
    size = block_size(W, epsilon)
    out = []
    for bit in pattern:
        if bit not in (0, 1):
            raise ValueError(f"pattern entries must be bits, got {bit!r}")
        out.extend([bit] * size)
    return out


def sum_letter_step(W: int, R: int, epsilon) -> int:
    """Spacing ``floor(2*R*W*eps + 1)`` between consecutive letters."""
    return math.floor(2 * R * W * as_fraction(epsilon) + 1)


def sum_letter_count(W: int, R: int, epsilon) -> int:
    """Number of letters ``floor(1/(2*W*eps + 1/R)) + 1`` (indices 0..count-1)."""
    epsilon = as_fraction(epsilon)
    return math.floor(1 / (2 * W * epsilon + Fraction(1, R))) + 1


def gen_sum_language(W, R, epsilon, letters) -> list[int]:
    """Map letter indices to the values ``n * step``."""
    W = check_positive_int(W, "W")
    R = check_positive_int(R, "R")
    letters = list(letters)
    if len(letters) != W:
        raise ValueError(f"a word has {W} letters, got {len(letters)}")
    step = sum_letter_step(W, R, epsilon)
    count = sum_letter_count(W, R, epsilon)
    out = []
    for n in letters:
        if not 0 <= n < count:
            raise ValueError(f"letter index {n} outside [0, {count - 1}]")
        if n * step > R:
            raise ValueError(f"letter value {n * step} exceeds R={R}")
        out.append(n * step)
    return out


def gen_bernoulli(p, n: int, seed: int) -> list[int]:
    p = float(as_fraction(p))
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return [1 if rng.random() < p else 0 for _ in range(n)]


def gen_uniform(R: int, n: int, seed: int) -> list[int]:
    R = check_positive_int(R, "R")
    rng = random.Random(seed)
    return [rng.randint(0, R) for _ in range(n)]


def gen_constant(v: int, n: int) -> list[int]:
    return [v] * n


def parse_stream(lines: str | Iterable[str], R: int | None = None) -> Iterator[int]:
    """Yield integers from one-per-line text, skipping blank lines.

    Values above ``R`` raise :class:`StreamParseError` when they are reached.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if not (text.isascii() and text.isdigit()):
            raise StreamParseError(lineno, text)
        value = int(text)
        if R is not None and value > R:
            raise StreamParseError(lineno, text, f"value exceeds range {R}")
        yield value


def format_stream(values: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in values)
