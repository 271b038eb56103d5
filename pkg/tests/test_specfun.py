import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foxeq.errors import DomainError, PrecisionError
from foxeq.specfun import (
    GramSeriesConfig,
    fractional_part,
    mobius_exponential,
    mobius_exponential_direct,
    mobius_sieve,
    riemann_R_exp,
    sine_integral,
)
from oracles import delta_two_term, mertens_trial_division, mobius_trial_division, riemann_R_li, si_taylor, small_primes


# --- Mobius ---------------------------------------------------------------

def test_mobius_small_values():
    table = mobius_sieve(12)
    assert [table[n] for n in range(1, 7)] == [1, -1, -1, 0, -1, 1]
    assert table[12] == 0
    assert len(table) == 12


def test_mobius_rejects_zero_limit():
    with pytest.raises(DomainError):
        mobius_sieve(0)


def test_mobius_table_is_read_only():
    table = mobius_sieve(10)
    with pytest.raises(ValueError):
        table.values[3] = 5


def test_mertens_matches_trial_division():
    assert mobius_sieve(100_000).mertens() == mertens_trial_division(100_000) == -48


def test_mobius_pointwise_against_trial_division():
    table = mobius_sieve(5000)
    primes = small_primes(80)
    assert all(table[n] == mobius_trial_division(n, primes) for n in range(1, 5001))


def test_mobius_primes_and_squares():
    table = mobius_sieve(2000)
    for p in small_primes(2000):
        assert table[p] == -1
    for q in range(2, 45):
        for n in range(q * q, 2001, q * q):
            assert table[n] == 0


def test_divisor_sum_identity_small():
    limit = 3000
    table = mobius_sieve(limit)
    acc = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        acc[d::d] += table[d]
    assert acc[1] == 1
    assert np.all(acc[2:] == 0)


@given(st.integers(2, 400), st.integers(2, 400))
def test_mobius_multiplicative_on_coprimes(m, n):
    table = mobius_sieve(160_000)
    if math.gcd(m, n) == 1:
        assert table[m * n] == table[m] * table[n]


# --- fractional part ------------------------------------------------------

@pytest.mark.parametrize("t, expected", [(2.75, 0.75), (3.0, 0.0), (0.2, 0.2)])
def test_fractional_part_examples(t, expected):
    assert fractional_part(t) == pytest.approx(expected, abs=1e-15)


@given(st.floats(0, 1e6, allow_nan=False))
def test_fractional_part_range(t):
    r = fractional_part(t)
    assert 0.0 <= r < 1.0
    assert float(t - r).is_integer()


# --- sine integral --------------------------------------------------------

def test_si_values():
    assert sine_integral(0.0) == 0.0
    assert sine_integral(1.0) == pytest.approx(0.946083070367, abs=1e-12)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 1.9, 2.1, 3.0, 5.0, 8.0])
def test_si_taylor_oracle(x):
    assert sine_integral(x) == pytest.approx(si_taylor(x), abs=2e-15)


def test_si_large_arguments_mpmath():
    for x in [10.0, 37.5, 200.0, 1e4]:
        assert sine_integral(x) == pytest.approx(float(mpmath.si(x)), abs=1e-14)


def test_si_monotone_on_zero_pi():
    xs = np.linspace(0, math.pi, 400)
    assert np.all(np.diff(sine_integral(xs)) > 0)


@given(st.floats(0, 1e5, allow_nan=False))
def test_si_bounded_by_si_pi(x):
    assert abs(sine_integral(x)) <= sine_integral(math.pi) + 1e-15


@given(st.floats(10, 1e5))
def test_si_asymptotic_envelope(x):
    assert abs(sine_integral(x) - math.pi / 2) <= 2.0 / x


def test_si_odd():
    xs = np.array([0.3, 2.5, 17.0])
    assert np.allclose(sine_integral(-xs), -sine_integral(xs), atol=0)


# --- Gram series R ---------------------------------------------------------

def test_R_at_zero():
    assert riemann_R_exp(0.0) == 1.0


def test_R_100_mpmath():
    assert riemann_R_exp(math.log(100.0)) == pytest.approx(float(mpmath.riemannr(100)), abs=1e-12)


def test_R_100_li_route_truncated():
    # the mu/li series converges slowly; at N = 50 it sits 0.035 from R(100)
    assert riemann_R_exp(math.log(100.0)) == pytest.approx(riemann_R_li(100.0, 50), abs=0.05)


@pytest.mark.parametrize("x", [2.0, 10.0, 1000.0, 1e6])
def test_R_mpmath_grid(x):
    assert riemann_R_exp(math.log(x)) == pytest.approx(float(mpmath.riemannr(x)), rel=1e-12)


def test_R_vectorised():
    u = np.array([-3.0, 0.0, 2.0])
    assert np.allclose(riemann_R_exp(u), [riemann_R_exp(v) for v in u], rtol=0, atol=0)


def test_plain_gram_over_budget():
    with pytest.raises(PrecisionError) as info:
        riemann_R_exp(-20.0, GramSeriesConfig(resummed_head=0))
    assert info.value.estimated_loss > 1e-9


def test_resummed_gram_at_minus_twenty():
    with mpmath.workdps(40):
        ref = float(mpmath.riemannr(mpmath.exp(-20)))
    assert riemann_R_exp(-20.0) == pytest.approx(ref, abs=1e-12)


def test_gram_config_validation():
    with pytest.raises(DomainError):
        GramSeriesConfig(max_terms=0)
    with pytest.raises(DomainError):
        GramSeriesConfig(term_tolerance=0.0)


# --- Delta -------------------------------------------------------------------

def test_delta_at_zero():
    assert mobius_exponential(0.0) == 0.0


def test_delta_negative_rejected():
    with pytest.raises(DomainError):
        mobius_exponential(-1.0)


def test_delta_small_y_two_terms():
    assert mobius_exponential(1e-3) == pytest.approx(delta_two_term(1e-3), abs=1e-9)


def test_delta_against_smoothed_direct_sum_at_5():
    assert abs(mobius_exponential(5.0) - mobius_exponential_direct(5.0)) < 5e-3


def test_delta_entire_series_mpmath():
    # sum_k (-y)^k / (k! zeta(k+1)) at 60 digits; cancellation budget is 1e-9
    with mpmath.workdps(60):
        for y in [0.5, 3.0, 12.0, 40.0]:
            Y = mpmath.mpf(y)
            ref = mpmath.fsum((-Y) ** k / (mpmath.factorial(k) * mpmath.zeta(k + 1)) for k in range(1, 400))
            assert mobius_exponential(y) == pytest.approx(float(ref), abs=1e-10)


@pytest.mark.parametrize("y", [1.0, 2.0, 5.0])
def test_delta_is_minus_y_times_R_derivative(y):
    h = 1e-5
    dR = (riemann_R_exp(-y + h) - riemann_R_exp(-y - h)) / (2 * h)
    assert abs(mobius_exponential(y) - (-y) * dR) < 1e-6
