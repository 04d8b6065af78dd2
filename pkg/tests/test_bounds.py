import math
from fractions import Fraction

import pytest

from windowsketch import ParameterError
from windowsketch.bounds import (
    block_language_bound,
    count_lower_bound,
    count_upper_theory,
    succinct_bound,
    sum_lower_bound,
    sum_upper_theory,
)


@pytest.mark.parametrize("W, eps, expected", [(64, "1/4", 6), (1024, "1/64", 31), (2, "1/4", 1)])
def test_count_lower_bound(W, eps, expected):
    assert count_lower_bound(W, eps) == expected


def test_count_lower_bound_precondition():
    with pytest.raises(ParameterError):
        count_lower_bound(64, "1/2")


def test_block_language_bound_dominates_rational_form():
    for W in range(2, 200):
        for d in (4, 5, 8, 16, 40):
            eps = Fraction(1, d)
            assert block_language_bound(W, eps) >= math.floor(1 / (2 * eps + Fraction(1, W)))


def test_sum_lower_bound():
    assert sum_lower_bound(10, 7, "1/400") == pytest.approx(10 * math.log2(11), abs=1e-9)
    assert sum_lower_bound(4, 7, "1/16") == pytest.approx(4.0, abs=1e-9)
    assert sum_lower_bound(10, 7, "1/4") == count_lower_bound(10, "1/4")
    # large epsilon is capped at 1/4 before the counting bound applies
    assert sum_lower_bound(10, 7, "1/2") == count_lower_bound(10, "1/4")


@pytest.mark.parametrize("W, eps, expected", [(1024, "1/64", 58), (4, "1/4", 12), (2, "1/2", 9)])
def test_count_upper_theory(W, eps, expected):
    assert count_upper_theory(W, eps) == pytest.approx(expected, abs=1e-9)


def test_sum_upper_theory():
    assert sum_upper_theory(256, "1/16") == pytest.approx(8 + 16, abs=1e-9)


@pytest.mark.parametrize(
    "W, eps, expected",
    [(2, "1/8", 2 * math.log2(3)), (10, "1/400", 10 * math.log2(21)), (7, "1/14", 7.0)],
)
def test_succinct_bound(W, eps, expected):
    assert succinct_bound(W, eps) == pytest.approx(expected, abs=1e-9)


def test_succinct_bound_wrong_regime():
    with pytest.raises(ParameterError):
        succinct_bound(10, "1/10")


def test_regime_values_at_boundary():
    # At eps = 1/(2W) the per-element bound degenerates to W*log2(1) = 0,
    # while the counting-style bound stays positive.
    for W in (16, 64, 256, 1024):
        eps = Fraction(1, 2 * W)
        assert sum_lower_bound(W, 10**6, eps) == 0
        assert count_lower_bound(W, min(Fraction(1, 4), eps)) >= math.floor(math.log2(W))
        # just below the boundary the per-element bound takes over
        assert sum_lower_bound(W, 10**6, Fraction(1, 8 * W)) == pytest.approx(W * math.log2(3))


def test_upper_over_lower_ratio_power_of_two_grid():
    worst = 0.0
    for a in range(6, 21):
        W = 2**a
        for j in range(2, 11):
            eps = Fraction(1, 2**j)
            if eps < Fraction(1, 2 * W):
                continue
            worst = max(worst, count_upper_theory(W, eps) / count_lower_bound(W, eps))
    assert worst <= 4


def test_known_small_window_ratio_exceptions():
    # constant terms dominate at desk scale for some non-power windows
    assert count_upper_theory(192, "1/16") / count_lower_bound(192, "1/16") > 4
