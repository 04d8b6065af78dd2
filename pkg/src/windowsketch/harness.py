"""Run a sketch beside the exact oracle and summarize error and memory."""

from __future__ import annotations

import decimal
from dataclasses import dataclass, fields
from fractions import Fraction

from . import bounds
from .count_sketch import CountSketch
from .oracle import ExactWindow
from .sum_sketch import SumSketch, Variant
from .validation import ParameterError, check_positive_int, check_value

__all__ = [
    "ErrorReport",
    "MemoryReport",
    "evaluate",
    "memory_report",
    "report_dict",
    "report_text",
    "fraction_to_decimal",
]


@dataclass(frozen=True)
class ErrorReport:
    steps: int
    queries: int
    max_abs_error: Fraction
    mean_error: Fraction  # mean of |error| over the queried steps
    bound: Fraction
    violations: int


@dataclass(frozen=True)
class MemoryReport:
    actual_state_bits: int
    denominator_overhead_bits: int
    theoretical_upper_bits: float
    lower_bound_bits: float | None
    ratio: float | None


def evaluate(sketch, stream, query_every: int = 1, clamp: bool = False) -> ErrorReport:
    """Feed ``stream`` to ``sketch`` and an :class:`ExactWindow` in lockstep.

    Every ``query_every`` steps the estimate is compared with the exact window
    sum; comparisons are exact (integers over the sketch's query scale).
    """
    query_every = check_positive_int(query_every, "query_every")
    W = sketch.params.W
    R = sketch.value_range
    oracle = ExactWindow(W)
    bound = sketch.error_bound
    scale = sketch.query_scale
    bound_num, bound_den = bound.numerator * scale, bound.denominator
    top = R * W * scale

    add = sketch.add_unchecked
    push = oracle.push
    query_scaled = sketch.query_scaled
    steps = queries = violations = 0
    max_err = total_err = 0
    for x in stream:
        x = check_value(x, R)
        push(x)
        add(x)
        steps += 1
        if steps % query_every:
            continue
        q = query_scaled()
        if clamp:
            q = min(max(q, 0), top)
        err = abs(q - oracle.running_sum * scale)
        queries += 1
        total_err += err
        if err > max_err:
            max_err = err
        if err * bound_den > bound_num:
            violations += 1
    return ErrorReport(
        steps=steps,
        queries=queries,
        max_abs_error=Fraction(max_err, scale),
        mean_error=Fraction(total_err, scale * queries) if queries else Fraction(0),
        bound=bound,
        violations=violations,
    )


def memory_report(sketch) -> MemoryReport:
    p = sketch.params
    if isinstance(sketch, CountSketch):
        overhead = 0
        upper = bounds.count_upper_theory(p.W, p.epsilon)
        try:
            lower = float(bounds.count_lower_bound(p.W, p.epsilon))
        except ParameterError:
            lower = None  # the bound needs epsilon <= 1/4
    elif isinstance(sketch, SumSketch):
        overhead = sketch.denominator_overhead_bits()
        if p.variant is Variant.SMALL_EPS and p.epsilon <= Fraction(1, 2 * p.W):
            upper = bounds.succinct_bound(p.W, p.epsilon)
        else:
            upper = bounds.sum_upper_theory(p.W, p.epsilon)
        lower = bounds.sum_lower_bound(p.W, p.R, p.epsilon)
    else:
        raise TypeError(f"unsupported sketch type {type(sketch).__name__}")
    actual = sketch.packed_bits()
    ratio = actual / lower if lower else None
    return MemoryReport(
        actual_state_bits=actual,
        denominator_overhead_bits=overhead,
        theoretical_upper_bits=upper,
        lower_bound_bits=lower,
        ratio=ratio,
    )


def fraction_to_decimal(value: Fraction, digits: int = 15) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return str(decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator))


def report_dict(sketch, error: ErrorReport | None = None, memory: MemoryReport | None = None) -> dict:
    """Flatten parameters and reports into one JSON-ready dict.

    Each rational ``f`` becomes ``f`` (decimal string), ``f_num`` and ``f_den``.
    """
    p = sketch.params
    out = {
        "window": p.W,
        "epsilon": str(p.epsilon),
        "range": sketch.value_range,
        "k": p.k,
    }
    if isinstance(sketch, SumSketch):
        out.update(variant=p.variant.value, rho=p.rho, block_size=p.s)
    else:
        out.update(block_size=p.s)
    for report in (error, memory):
        if report is None:
            continue
        for f in fields(report):
            value = getattr(report, f.name)
            if isinstance(value, Fraction):
                out[f.name] = fraction_to_decimal(value)
                out[f"{f.name}_num"] = value.numerator
                out[f"{f.name}_den"] = value.denominator
            else:
                out[f.name] = value
    return out


def report_text(data: dict) -> str:
    width = max(len(k) for k in data)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in data.items())

