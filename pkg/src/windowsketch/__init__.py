"""Sliding-window counting and summing with additive error and O(1) updates."""

from .bounds import (
    count_lower_bound,
    count_upper_theory,
    succinct_bound,
    sum_lower_bound,
    sum_upper_theory,
)
from .count_sketch import CountParams, CountSketch, derive_count_params
from .harness import ErrorReport, MemoryReport, evaluate, memory_report
from .numeric import Scale, ScaledValue, round_frac, to_scaled
from .oracle import ExactWindow
from .sum_sketch import SumParams, SumSketch, Variant, derive_sum_params
from .validation import ParameterError

__version__ = "0.1.0"

__all__ = [
    "CountParams",
    "CountSketch",
    "ErrorReport",
    "ExactWindow",
    "MemoryReport",
    "ParameterError",
    "Scale",
    "ScaledValue",
    "SumParams",
    "SumSketch",
    "Variant",
    "count_lower_bound",
    "count_upper_theory",
    "derive_count_params",
    "derive_sum_params",
    "evaluate",
    "memory_report",
    "round_frac",
    "succinct_bound",
    "sum_lower_bound",
    "sum_upper_theory",
    "to_scaled",
]
