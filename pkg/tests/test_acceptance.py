"""Acceptance criteria 1-11, one test each.

Every test logs a single PASS/FAIL line (collected in the terminal summary
under "acceptance criteria") and then asserts at the stated tolerance.
Run alone with ``python3 -m pytest tests/test_acceptance.py`` or
``python3 tests/test_acceptance.py``.
"""
import math

import numpy as np
import pytest

from foxeq.complexfun import functional_equation_residual, gamma_c, sin_pi, zeta_c, zeta_prime
from foxeq.fox import (
    Kernel,
    fox_residual,
    kernel_mellin,
    modified_fox_residual,
    modified_fox_solution,
    modified_fox_solution_function,
    proposition_transform_check,
)
from foxeq.errors import SingularConfigurationError
from foxeq.identities import (
    GRID_SEED,
    check_contour_shift_4_3,
    check_eq_4_9,
    check_theorem_4_1,
    check_theorem_4_2,
    euler_gamma_oracle,
)
from foxeq.quadrature import (
    ContourSpec,
    _line_sum,
    fourier_sine_transform,
    fractional_weighted_integral,
    inverse_mellin_line,
    mellin_transform_numeric,
)
from foxeq.specfun import mobius_exponential, mobius_exponential_direct, mobius_sieve, riemann_R_exp
from foxeq.zeros import ZeroSumConfig, alternating_zeta_series, waldvogel_rhs, zero_sum_f

from oracles import circle_derivative, mertens_trial_division

TWO_PI = 2 * math.pi
exp_neg = lambda t: np.exp(-np.asarray(t, dtype=float))
exp_sine = lambda x: np.asarray(x, dtype=float) / (1 + np.asarray(x, dtype=float) ** 2)


def bose_minus_pole(t):
    t = np.asarray(t, dtype=float)
    return 1 / np.expm1(t) - 1 / t


def record(log, number, ok, text):
    line = f"{number:2d} {'PASS' if ok else 'FAIL'}  {text}"
    log[f"{number:02d}"] = line
    print(line)
    return ok


def seeded_strip(count, seed):
    rng = np.random.default_rng(seed)
    return rng.uniform(0.05, 0.95, count) + 1j * rng.uniform(-40.0, 40.0, count)


def test_criterion_01_sine_transform(acceptance_log):
    errs = []
    for w in [1.0, 2.0, 5.0]:
        res = fourier_sine_transform(lambda t: 1 / np.expm1(TWO_PI * t), w)
        errs.append(abs(res.value - 0.5 * (1 / math.expm1(w) + 0.5 - 1 / w)))
    ok = max(errs) < 1e-8
    record(acceptance_log, 1, ok, f"sine transform of 1/(e^(2 pi t)-1), w in 1,2,5: max abs err {max(errs):.2e} < 1e-8")
    assert ok


def test_criterion_02_series_fox_pair(acceptance_log):
    # the pair holds with kernel 2 sin(xt) and f(x) = 1/(2x) - 1/4 (weight-2 normalisation)
    delta = lambda t: 0.5 / np.expm1(t)
    f = lambda x: 0.5 / np.asarray(x, dtype=float) - 0.25
    res = [abs(fox_residual(delta, f, Kernel.SINE, x, scale=TWO_PI, weight=2.0)) for x in [1.0, 2.0, 4.0]]
    ok = max(res) < 1e-6
    record(acceptance_log, 2, ok, f"Fox residual of 1/(2(e^x-1)), x in 1,2,4, kernel 2 sin: max {max(res):.2e} < 1e-6")
    assert ok


def test_criterion_03_functional_equations(acceptance_log):
    fe = [functional_equation_residual(s) for s in seeded_strip(10, GRID_SEED)]
    kbar = kernel_mellin(Kernel.SINE, weight=2.0)
    prop = [proposition_transform_check(gamma_c, kbar, s) for s in seeded_strip(10, GRID_SEED + 1)]
    worst = max(fe + prop)
    ok = worst < 1e-8
    record(acceptance_log, 3, ok, f"functional equation and transformed form, seeds {GRID_SEED}/{GRID_SEED + 1}: "
                                  f"max rel residual {worst:.2e} < 1e-8")
    assert ok


def test_criterion_04_modified_equation(acceptance_log):
    res = []
    for a in [1.0, 3.0]:
        delta = modified_fox_solution_function(exp_neg, a, sine_transform=exp_sine)
        res += [abs(modified_fox_residual(delta, exp_neg, a, x)) for x in [0.5, 1.0, 2.0, 5.0]]
    mismatches = 0
    for a in [TWO_PI, TWO_PI + 1e-11, TWO_PI - 1e-11, TWO_PI + 1e-8, TWO_PI - 1e-6, TWO_PI + 0.1, 1.0]:
        expected = abs(math.pi ** 2 - a * math.pi / 2) < 1e-9
        try:
            modified_fox_solution(exp_neg, a, 1.0, sine_transform=exp_sine)
            raised = False
        except SingularConfigurationError:
            raised = True
        mismatches += raised != expected
    ok = max(res) < 1e-6 and mismatches == 0
    record(acceptance_log, 4, ok, f"modified equation residual a in 1,3: max {max(res):.2e} < 1e-6; "
                                  f"singularity flag mismatches {mismatches}")
    assert ok


def test_criterion_05_series_solution(acceptance_log, table):
    cfg = ZeroSumConfig(max_zeros=30)
    series_err, quad_err = [], []
    for x in [1.5, 2.0, 3.0]:
        rhs = alternating_zeta_series(x)
        lhs = math.pi * float(mobius_exponential(TWO_PI * x)) + zero_sum_f(x, table, cfg)
        series_err.append(abs(lhs - rhs))
        quad_err.append(abs(fourier_sine_transform(mobius_exponential, x).value - rhs))
    ok = max(series_err) < 1e-5 and max(quad_err) < 1e-4
    record(acceptance_log, 5, ok, f"pi Delta(2 pi x) + f(x) vs odd-zeta series, 30 zeros: max {max(series_err):.2e} "
                                  f"< 1e-5; quadrature route max {max(quad_err):.2e} < 1e-4")
    assert ok


def test_criterion_06_waldvogel(acceptance_log, table):
    errs = [abs(riemann_R_exp(-TWO_PI * t) - waldvogel_rhs(t, table)) for t in [1.2, 1.5, 2.0, 3.0]]
    ok = max(errs) < 1e-8
    record(acceptance_log, 6, ok, f"Gram R(e^(-2 pi t)) vs zero expansion, t in 1.2..3: max {max(errs):.2e} < 1e-8")
    assert ok


def test_criterion_07_homogeneous_family(acceptance_log, table):
    zero = lambda t: 0.0 * np.asarray(t)
    hom = [abs(modified_fox_residual(bose_minus_pole, zero, TWO_PI, x)) for x in [0.5, 1.0, 2.0]]
    f = lambda x: zero_sum_f(x, table)
    fam = []
    for lam in [-2.0, 1.0, 10.0]:
        delta = lambda t, lam=lam: mobius_exponential(t) + lam * bose_minus_pole(t)
        fam += [abs(modified_fox_residual(delta, f, TWO_PI, x)) for x in [1.5, 2.5]]
    ok = max(hom) < 1e-6 and max(fam) < 1e-5
    record(acceptance_log, 7, ok, f"homogeneous residual max {max(hom):.2e} < 1e-6; "
                                  f"family lambda in -2,1,10 max {max(fam):.2e} < 1e-5")
    assert ok


def test_criterion_08_self_reciprocal(acceptance_log):
    mel = mellin_transform_numeric(bose_minus_pole, 0.5).value
    ref = (zeta_c(0.5) * gamma_c(0.5)).real
    rel = abs(np.real(mel) - ref) / abs(ref)
    pair = [abs(fourier_sine_transform(bose_minus_pole, x).value / math.pi - float(bose_minus_pole(TWO_PI * x)))
            for x in [0.5, 1.0, 2.0]]
    ok = rel < 1e-8 and max(pair) < 1e-6
    record(acceptance_log, 8, ok, f"Mellin of 1/(e^t-1)-1/t at 1/2 rel err {rel:.2e} < 1e-8; "
                                  f"self-reciprocal sine pair max {max(pair):.2e} < 1e-6")
    assert ok


def test_criterion_09_shared_contour(acceptance_log):
    # Both fractional-part forms reduce to a contour equal to +(1/pi) arctan(1/(2 pi a));
    # a minus sign for the first form is not reproducible (the Laplace route fixes the sign).
    errs, laplace, neg_sign = [], [], []
    for a in [1.0, 2.0]:
        r1 = check_theorem_4_1(a, ContourSpec(-0.5, 400.0))
        r2 = check_theorem_4_2(a, ContourSpec(-0.5, 400.0))
        target = math.atan(1 / (TWO_PI * a)) / math.pi
        errs += [abs(r1.lhs - target), abs(r2.lhs - target)]
        laplace.append(abs(r1.params["laplace_route"] - target))
        neg_sign.append(abs(r1.lhs + target))
    ok = max(errs) < 1e-6 and max(laplace) < 1e-8
    record(acceptance_log, 9, ok, f"contour c=-1/2 T=400 vs +(1/pi)arctan(1/(2 pi a)), a in 1,2: max {max(errs):.2e} "
                                  f"< 1e-6 (negative sign off by {min(neg_sign):.3f}); Laplace-Si route max "
                                  f"{max(laplace):.2e} < 1e-8")
    assert ok


def test_criterion_10_fractional_part_integrals(acceptance_log):
    frac = []
    for a in [1.0, 2.0]:
        direct = fractional_weighted_integral(lambda t, a=a: np.exp(-np.asarray(t) / a), decay_rate=1 / a).value
        contour = -inverse_mellin_line(lambda s: zeta_c(s) * gamma_c(s) / s, ContourSpec(0.5, 60.0), 1 / a).value
        frac.append(abs(direct - contour))
    shift = [check_contour_shift_4_3(a).abs_err for a in [1.0, 2.0, math.e]]
    gamma_err = abs(euler_gamma_oracle() - 0.5772156649015329)
    mellin = []
    for z in [0.3, 1.7]:
        v = inverse_mellin_line(lambda s: zeta_c(s) / s, ContourSpec(-0.5, 400.0, taper=0.5), 1 / z).value
        mellin.append(abs(-v - ((z - math.floor(z)) - 0.5)))
    laplace = [check_eq_4_9(a).abs_err for a in [1.0, 2.0, 100.0]]
    envelope = abs(100.0 ** 2 * check_eq_4_9(100.0).lhs - 1)
    ok = (max(frac) < 1e-6 and max(shift) < 1e-6 and max(mellin) < 1e-4 and max(laplace) < 1e-8
          and envelope < 0.01)
    record(acceptance_log, 10, ok,
           f"fractional part vs contour max {max(frac):.2e}; residue shift max {max(shift):.2e} "
           f"(gamma oracle err {gamma_err:.1e}); inverse Mellin {{z}}-1/2 max {max(mellin):.2e} < 1e-4; "
           f"Laplace of Si max {max(laplace):.2e} < 1e-8, a^2 value - 1 at 100: {envelope:.1e}")
    assert ok


def _imag_residues():
    out = []
    theorem = lambda s: zeta_c(s) * gamma_c(s) / (s * zeta_c(1 - s))
    for F, spec, x in [
        (theorem, ContourSpec(-0.5, 400.0), 1.0),
        (theorem, ContourSpec(-0.5, 400.0), 0.5),
        (lambda s: zeta_c(s) * gamma_c(s) / s, ContourSpec(0.5, 60.0), 1.0),
        (lambda s: zeta_c(s) * gamma_c(s) / s, ContourSpec(-0.5, 60.0), 0.5),
        (lambda s: gamma_c(s) * zeta_c(s), ContourSpec(-0.5, 60.0), 2.0),
        (lambda s: zeta_c(s) / s, ContourSpec(-0.5, 400.0, taper=0.5), 1 / 1.7),
    ]:
        value, _ = _line_sum(F, spec, x, 2 * spec.panels)
        out.append(abs(value.imag) / max(1.0, abs(value.real)))
    return out


def test_criterion_11_infrastructure(acceptance_log):
    rng = np.random.default_rng(GRID_SEED + 2)
    grid = rng.uniform(-2, 3, 30) + 1j * rng.uniform(-60, 60, 30)
    grid = grid[np.abs(grid - 1) > 0.1]
    fe = max(functional_equation_residual(s) for s in grid)

    imag = max(_imag_residues())

    d = zeta_prime(grid)
    fd = max(np.abs(d - circle_derivative(zeta_c, grid)) / np.abs(d))

    limit = 100_000
    mu = mobius_sieve(limit).values.astype(np.int64)
    divisor_sum = np.zeros(limit + 1, dtype=np.int64)
    for k in range(1, limit + 1):
        if mu[k]:
            divisor_sum[k::k] += mu[k]
    expected = np.zeros(limit + 1, dtype=np.int64)
    expected[1] = 1
    divisor_ok = np.array_equal(divisor_sum[1:], expected[1:])
    mertens_ok = int(mu[1:].sum()) == mertens_trial_division(limit)

    ys = np.arange(0.5, 10.0 + 1e-9, 0.5)
    delta = np.max(np.abs(mobius_exponential(ys) - mobius_exponential_direct(ys)))

    ok = fe < 1e-8 and imag < 1e-8 and fd < 1e-7 and divisor_ok and mertens_ok and delta < 5e-3
    record(acceptance_log, 11, ok,
           f"functional equation on -2..3 x |Im|<=60: {fe:.2e} < 1e-8; contour imaginary residue {imag:.1e} < 1e-8; "
           f"zeta' vs differences {fd:.1e} < 1e-7; divisor sums to 1e5 {'exact' if divisor_ok else 'WRONG'}; "
           f"Delta vs smoothed direct sums {delta:.1e} < 5e-3")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
