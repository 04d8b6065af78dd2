"""Exact sliding-window sum over a ring buffer (the reference for error checks)."""

from __future__ import annotations

from .validation import check_positive_int

__all__ = ["ExactWindow"]


class ExactWindow:
    """Keeps the last ``W`` elements; starts as ``W`` zeros."""

    def __init__(self, W: int):
        self.W = check_positive_int(W, "W")
        self.buf = [0] * self.W
        self.head = 0
        self.running_sum = 0

    def push(self, x: int) -> None:
        if x < 0:
            raise ValueError(f"elements must be non-negative, got {x}")
        head = self.head
        self.running_sum += x - self.buf[head]
        self.buf[head] = x
        self.head = head + 1 if head + 1 < self.W else 0

    def exact(self) -> int:
        return self.running_sum

    def extend(self, xs) -> "ExactWindow":
        for x in xs:
            self.push(x)
        return self
