from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from windowsketch.numeric import Scale, ScaledValue, ceil_log2, round_frac, to_scaled


def brute_round(x, R, rho):
    """Nearest n/2^rho to x/R by enumerating every candidate; ties go up."""
    target = Fraction(x, R)
    best = None
    for n in range(2**rho + 1):
        d = abs(target - Fraction(n, 2**rho))
        if best is None or d <= best[0]:
            best = (d, n)
    return best[1]


@pytest.mark.parametrize(
    "x, R, rho, expected",
    [(3, 4, 4, 12), (1, 3, 2, 1), (1, 2, 1, 1), (0, 7, 3, 0), (0, 1, 0, 0)],
)
def test_round_frac_examples(x, R, rho, expected):
    assert round_frac(x, R, rho) == expected


def test_round_frac_matches_enumeration():
    for R in range(1, 13):
        for rho in range(0, 5):
            for x in range(R + 1):
                assert round_frac(x, R, rho) == brute_round(x, R, rho), (x, R, rho)


def test_round_frac_tie_goes_up():
    # 1/4 sits exactly between 0 and 1/2 on the rho=1 grid
    assert round_frac(1, 4, 1) == 1
    assert round_frac(3, 4, 1) == 2


@pytest.mark.parametrize("x, R", [(5, 4), (-1, 4)])
def test_round_frac_rejects_out_of_range(x, R):
    with pytest.raises(ValueError):
        round_frac(x, R, 3)


@given(st.integers(1, 10**6), st.integers(0, 24), st.data())
def test_round_frac_error_bound(R, rho, data):
    x = data.draw(st.integers(0, R))
    n = round_frac(x, R, rho)
    assert 0 <= n <= 2**rho
    assert abs(Fraction(x, R) - Fraction(n, 2**rho)) <= Fraction(1, 2 ** (rho + 1))


@given(st.integers(1, 5000), st.integers(0, 16), st.data())
def test_round_frac_monotone(R, rho, data):
    a = data.draw(st.integers(0, R))
    b = data.draw(st.integers(a, R))
    assert round_frac(a, R, rho) <= round_frac(b, R, rho)


def test_to_scaled_examples():
    assert to_scaled(12, Scale(rho=4, k=6)).raw == 72
    assert to_scaled(0, Scale(rho=3, k=5)).raw == 0
    one = to_scaled(2**5, Scale(rho=5, k=1))
    assert one.raw == 32 and one.as_fraction() == 1


def test_scale_denominator_and_validation():
    assert Scale(rho=4, k=6).denominator == 96
    with pytest.raises(ValueError):
        Scale(rho=-1, k=2)
    with pytest.raises(ValueError):
        Scale(rho=0, k=0)
    with pytest.raises(ValueError):
        ScaledValue(-1, Scale(0, 1))


@given(
    st.integers(1, 64),
    st.integers(1, 40),
    st.integers(0, 10),
    st.lists(st.integers(0, 1000), max_size=60),
)
def test_scaled_arithmetic_has_no_drift(W, k, rho, xs):
    # carry-and-subtract in raw units tracks the same computation in Fractions
    R = 1000
    scale = Scale(rho, k)
    block_raw = W << rho
    raw, ref = 0, Fraction(0)
    for x in xs:
        n = round_frac(x, R, rho)
        raw += to_scaled(n, scale).raw
        ref += Fraction(n, 2**rho)
        v = raw // block_raw
        raw -= v * block_raw
        ref -= v * Fraction(W, k)
        assert ScaledValue(raw, scale).as_fraction() == ref


def test_ceil_log2():
    assert [ceil_log2(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]
