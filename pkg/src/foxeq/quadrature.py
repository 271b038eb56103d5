"""Integration engines.

Every engine takes a *vectorised* integrand: a callable mapping a numpy
array of nodes to an array of values.  Panels use 15-point Gauss-Legendre
throughout; a panel is accepted when the one-panel and two-half-panel rules
agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional, Union

import numpy as np

from .errors import AccuracyError, DomainError, SymmetryError

__all__ = [
    "QuadratureConfig",
    "ContourSpec",
    "IntegralResult",
    "integrate_interval",
    "integrate_semi_infinite",
    "fourier_sine_transform",
    "fourier_cosine_transform",
    "mellin_transform_numeric",
    "abel_mellin_transform",
    "inverse_mellin_line",
    "fractional_weighted_integral",
    "wynn_epsilon",
]

_GL_X, _GL_W = np.polynomial.legendre.leggauss(15)


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    oscillatory_max_segments: int = 400
    acceleration_order: int = 10

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1 or self.oscillatory_max_segments < 1 or self.acceleration_order < 1:
            raise DomainError("quadrature caps must be >= 1")

    def tightened(self, factor=0.5):
        """Same caps, tolerances scaled by ``factor``."""
        return replace(self, abs_tol=self.abs_tol * factor, rel_tol=self.rel_tol * factor)


DEFAULT_QUAD = QuadratureConfig()


@dataclass(frozen=True)
class ContourSpec:
    """The segment Re(s) = abscissa_c, |Im(s)| <= height_T of a vertical line.

    ``panel_count`` defaults to about two panels per unit height.
    ``taper`` > 0 multiplies the integrand by a smooth flat-top window that
    equals 1 for |Im s| <= (1 - taper) T and falls to 0 at T; it is meant
    for integrands that decay too slowly for plain truncation.
    """

    abscissa_c: float
    height_T: float = 60.0
    panel_count: Optional[int] = None
    taper: float = 0.0

    def __post_init__(self):
        if not self.height_T > 0:
            raise DomainError("height_T must be > 0")
        if self.panel_count is not None and self.panel_count < 8:
            raise DomainError("panel_count must be >= 8")
        if not 0.0 <= self.taper < 1.0:
            raise DomainError("taper must lie in [0, 1)")

    @property
    def panels(self) -> int:
        if self.panel_count is not None:
            return self.panel_count
        return max(8, int(math.ceil(2.0 * self.height_T)))


@dataclass
class IntegralResult:
    value: Union[float, complex]
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0:
            raise ValueError("error_estimate must be >= 0")

    def __float__(self):
        return float(self.value.real if isinstance(self.value, complex) else self.value)


def _gl(f, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * np.dot(_GL_W, f(mid + half * _GL_X))


def _panel(f, a, b):
    """Return (refined value, error estimate) from one and two GL15 panels."""
    m = 0.5 * (a + b)
    half = 0.5 * (b - a)
    q = 0.5 * half
    nodes = np.concatenate((m + half * _GL_X, 0.5 * (a + m) + q * _GL_X, 0.5 * (m + b) + q * _GL_X))
    vals = f(nodes)
    whole = half * np.dot(_GL_W, vals[:15])
    left = q * np.dot(_GL_W, vals[15:30])
    right = q * np.dot(_GL_W, vals[30:])
    fine = left + right
    return fine, abs(fine - whole)


def _adaptive(f, a, b, abs_tol, rel_tol, max_sub, budget=None):
    """Globally adaptive bisection. Returns (value, error, evaluations, converged)."""
    value, err = _panel(f, a, b)
    intervals = [(err, a, b, value)]
    total, total_err = value, err
    evals = 45
    splits = 0
    while total_err > max(abs_tol, rel_tol * abs(total)):
        if splits >= max_sub:
            return total, total_err, evals, False
        # bisect the worst interval
        k = max(range(len(intervals)), key=lambda i: intervals[i][0])
        e0, lo, hi, v0 = intervals.pop(k)
        mid = 0.5 * (lo + hi)
        v1, e1 = _panel(f, lo, mid)
        v2, e2 = _panel(f, mid, hi)
        evals += 90
        splits += 1
        intervals.append((e1, lo, mid, v1))
        intervals.append((e2, mid, hi, v2))
        total = total - v0 + v1 + v2
        total_err = total_err - e0 + e1 + e2
        if total_err < 0:
            total_err = sum(iv[0] for iv in intervals)
    return total, total_err, evals, True


def integrate_interval(f: Callable, a: float, b: float, cfg: QuadratureConfig = DEFAULT_QUAD) -> IntegralResult:
    """Adaptive GL15 integral of ``f`` over the finite interval [a, b]."""
    value, err, evals, ok = _adaptive(f, a, b, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions)
    if not ok:
        raise AccuracyError(f"interval [{a}, {b}] did not converge", value, err)
    return IntegralResult(value, err, evals)


def _scan_peak(g, lo=-60.0, hi=60.0, step=0.5):
    u = np.arange(lo, hi + step, step)
    with np.errstate(all="ignore"):
        vals = np.abs(g(u))
    vals = np.where(np.isfinite(vals), vals, 0.0)
    if not np.any(vals > 0):
        return 0.0
    return float(u[int(np.argmax(vals))])


def _march(g, start, direction, cfg, tol_scale, divergence_error):
    """Integrate g over [start, +-inf) in unit panels until contributions die out."""
    total = 0.0
    err = 0.0
    evals = 0
    quiet = 0
    growth = 0
    prev_mag = None
    width = 1.0
    pos = start
    for _ in range(cfg.max_subdivisions):
        a, b = (pos, pos + width) if direction > 0 else (pos - width, pos)
        target = max(cfg.abs_tol, cfg.rel_tol * abs(total)) * tol_scale
        v, e, n, ok = _adaptive(g, a, b, target, cfg.rel_tol * tol_scale, 200)
        evals += n
        total += v
        err += e
        mag = abs(v)
        pos = b if direction > 0 else a
        if prev_mag is not None and mag > prev_mag * 1.0001 and mag > target:
            growth += 1
        else:
            growth = 0
        if growth >= 40:
            raise divergence_error(f"panel contributions keep growing near u = {pos:.1f}")
        prev_mag = mag
        if mag <= 1e-3 * target:
            quiet += 1
            if quiet >= 3:
                return total, err + mag, evals
        else:
            quiet = 0
        if abs(pos - start) > 30:
            width = 2.0
    raise AccuracyError("semi-infinite march did not terminate", total, float("inf"))


def _exp_map_integral(integrand_u, cfg, divergence_error):
    start = _scan_peak(integrand_u)
    right, er, nr = _march(integrand_u, start, +1, cfg, 0.5, divergence_error)
    left, el, nl = _march(integrand_u, start, -1, cfg, 0.5, divergence_error)
    return right + left, er + el, nr + nl


def integrate_semi_infinite(f: Callable, cfg: QuadratureConfig = DEFAULT_QUAD) -> IntegralResult:
    """Integral of ``f`` over (0, inf).

    Uses the exponential map t = e^u, so both an integrable singularity at
    the origin and an algebraic or exponential tail become exponentially
    decaying in u.  Unit panels are added outward from the peak of the
    mapped integrand until three in a row are negligible.
    """
    def g(u):
        t = np.exp(u)
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            val = f(t) * t
        return np.where(np.isfinite(val), val, 0.0) if np.isrealobj(val) else val

    value, err, evals = _exp_map_integral(g, cfg, AccuracyError)
    return IntegralResult(value, err, evals)


def mellin_transform_numeric(f: Callable, s, cfg: QuadratureConfig = DEFAULT_QUAD) -> IntegralResult:
    """Integral of t^{s-1} f(t) over (0, inf) for complex s inside f's strip.

    Raises DomainError when the panel contributions grow, which is how a
    point outside the strip of convergence shows up.
    """
    s = complex(s)

    def g(u):
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            val = f(np.exp(u)) * np.exp(s * u)
        return np.where(np.isfinite(val), val, 0.0)

    value, err, evals = _exp_map_integral(g, cfg, DomainError)
    if abs(value.imag) <= 1e-15 * max(1.0, abs(value)) and s.imag == 0:
        value = value.real
    return IntegralResult(value, err, evals)


def abel_mellin_transform(f: Callable, s, cfg: QuadratureConfig = DEFAULT_QUAD,
                          epsilons=(0.1, 0.05, 0.025)) -> IntegralResult:
    """Mellin transform of a non-decaying oscillatory ``f`` by Abel summation.

    The damped transforms of e^{-eps t} f(t) are extrapolated to eps = 0 by
    polynomial (Richardson) extrapolation in eps.  The error estimate is
    the change from dropping the largest eps.
    """
    vals = []
    evals = 0
    for eps in epsilons:
        res = mellin_transform_numeric(lambda t, e=eps: f(t) * np.exp(-e * t), s, cfg)
        vals.append(res.value)
        evals += res.evaluations
    eps = np.asarray(epsilons, dtype=float)
    full = _neville_at_zero(eps, vals)
    reduced = _neville_at_zero(eps[1:], vals[1:])
    return IntegralResult(full, float(abs(full - reduced)), evals)


def _neville_at_zero(xs, ys):
    p = list(ys)
    n = len(xs)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = (xs[i] * p[i + 1] - xs[i + m] * p[i]) / (xs[i] - xs[i + m])
    return p[0]


def wynn_epsilon(partial_sums):
    """Wynn's epsilon algorithm; returns the highest even-column estimate."""
    cur = [complex(v) if isinstance(v, complex) else float(v) for v in partial_sums]
    prev = [0.0] * (len(cur) + 1)
    best = cur[-1]
    col = 0
    while len(cur) > 1:
        nxt = []
        for i in range(len(cur) - 1):
            diff = cur[i + 1] - cur[i]
            if diff == 0 or abs(diff) < 1e-300:
                return best
            nxt.append(prev[i + 1] + 1.0 / diff)
        prev, cur = cur, nxt
        col += 1
        if col % 2 == 0:
            best = cur[-1]
    return best


def _oscillatory(f, x, cfg, trig, phase):
    # the first segment ends at the first zero, phase * pi / x
    x = float(x)
    if not x > 0:
        raise DomainError("transform frequency must be > 0")
    step = math.pi / x
    first_edge = phase * step
    seg_tol = 0.1 * cfg.abs_tol

    def integrand(t):
        return trig(x * t) * f(t)

    edges_prev = 0.0
    edge = first_edge
    partial = 0.0
    sums = []
    quad_err = 0.0
    evals = 0
    window = 2 * cfg.acceleration_order + 1
    estimates = []
    negligible = 0
    for k in range(cfg.oscillatory_max_segments):
        v, e, n, ok = _adaptive(integrand, edges_prev, edge, seg_tol, 1e-14, 100)
        if not ok:
            raise AccuracyError(f"segment [{edges_prev:.4g}, {edge:.4g}] did not converge", partial, e)
        evals += n
        quad_err += e
        partial += v
        sums.append(partial)
        edges_prev, edge = edge, edge + step
        if abs(v) <= 1e-3 * cfg.abs_tol:
            negligible += 1
            if negligible >= 2:
                return IntegralResult(partial, quad_err, evals)
            continue
        negligible = 0
        if len(sums) >= 7:
            est = wynn_epsilon(sums[-window:])
            estimates.append(est)
            if len(estimates) >= 3:
                acc_err = abs(estimates[-1] - estimates[-2]) + abs(estimates[-1] - estimates[-3])
                target = max(cfg.abs_tol, cfg.rel_tol * abs(est))
                if acc_err + quad_err <= target:
                    return IntegralResult(est, acc_err + quad_err, evals)
    best = estimates[-1] if estimates else partial
    raise AccuracyError(f"oscillatory transform at x = {x:g} exceeded "
                        f"{cfg.oscillatory_max_segments} segments", best)


def fourier_sine_transform(f: Callable, x: float, cfg: QuadratureConfig = DEFAULT_QUAD) -> IntegralResult:
    """Integral of sin(x t) f(t) over (0, inf).

    The half-line is cut at the zeros k pi / x of the sine; the segment
    integrals form an eventually alternating series whose partial sums are
    accelerated by the epsilon algorithm.  ``f`` should be eventually
    monotone; algebraic decay as slow as 1/t is fine.
    """
    return _oscillatory(f, x, cfg, np.sin, 1.0)


def fourier_cosine_transform(f: Callable, x: float, cfg: QuadratureConfig = DEFAULT_QUAD) -> IntegralResult:
    """Integral of cos(x t) f(t) over (0, inf), same scheme as the sine transform."""
    return _oscillatory(f, x, cfg, np.cos, 0.5)


def _flat_top(tau, height, taper):
    if taper <= 0:
        return np.ones_like(tau)
    a = (1.0 - taper) * height
    r = np.clip((np.abs(tau) - a) / (height - a), 0.0, 1.0)
    # C-infinity step from 1 to 0 on r in [0, 1]
    out = np.ones_like(tau)
    inner = (r > 0) & (r < 1)
    ri = r[inner]
    e1 = np.exp(-1.0 / (1.0 - ri))
    e0 = np.exp(-1.0 / ri)
    out[inner] = e1 / (e1 + e0)
    out[r >= 1] = 0.0
    return out


def _line_sum(F, spec, x, panels):
    c = spec.abscissa_c
    T = spec.height_T
    edges = np.linspace(-T, T, panels + 1)
    half = 0.5 * np.diff(edges)
    mids = 0.5 * (edges[1:] + edges[:-1])
    tau = (mids[:, None] + half[:, None] * _GL_X[None, :]).ravel()
    weights = (half[:, None] * _GL_W[None, :]).ravel()
    s = c + 1j * tau
    vals = np.asarray(F(s), dtype=complex) * np.exp(-s * math.log(x))
    vals = vals * _flat_top(tau, T, spec.taper)
    return np.dot(weights, vals) / (2.0 * math.pi), tau.size


def inverse_mellin_line(F: Callable, spec: ContourSpec, x: float, symmetry_tol: float = 1e-8) -> IntegralResult:
    """(1/2 pi i) times the integral of F(s) x^{-s} ds along the truncated line.

    ``F`` must be vectorised over complex arrays and conjugate symmetric,
    F(conj s) = conj F(s).  The real part is returned.  The error estimate
    is the change between ``panels`` and ``2 * panels`` GL15 panels, plus
    the imaginary part, plus the integrand magnitude at the truncation
    height when no taper is used (a heuristic for the truncation error).
    With a taper the truncation term is instead the change from the same
    window at half the height.
    """
    x = float(x)
    if not x > 0:
        raise DomainError("inverse_mellin_line needs x > 0")
    coarse, n1 = _line_sum(F, spec, x, spec.panels)
    fine, n2 = _line_sum(F, spec, x, 2 * spec.panels)
    if abs(fine.imag) > symmetry_tol * max(1.0, abs(fine.real)):
        raise SymmetryError(f"imaginary residue {fine.imag:.3g} at x = {x:g}; F is not conjugate symmetric")
    err = abs(fine - coarse) + abs(fine.imag)
    if spec.taper == 0:
        ends = np.array([spec.abscissa_c + 1j * spec.height_T, spec.abscissa_c - 1j * spec.height_T])
        with np.errstate(all="ignore"):
            edge = np.abs(np.asarray(F(ends), dtype=complex)).max() * x ** (-spec.abscissa_c)
        if np.isfinite(edge):
            err += edge / (2.0 * math.pi)
    else:
        half_spec = replace(spec, height_T=0.5 * spec.height_T, panel_count=max(8, spec.panels))
        half, n3 = _line_sum(F, half_spec, x, half_spec.panels)
        err += abs(fine.real - half.real)
        n2 += n3
    return IntegralResult(float(fine.real), float(err), n1 + n2)


def fractional_weighted_integral(g: Callable, cfg: QuadratureConfig = DEFAULT_QUAD, *,
                                 shift: float = 0.0, decay_rate: Optional[float] = 1.0,
                                 decay_power: Optional[float] = None,
                                 max_panels: int = 5000) -> IntegralResult:
    """Integral of ({t} + shift) / t * g(t) over (0, inf).

    Integrates unit panels [k, k+1), on which the fractional part is smooth.
    The caller declares the tail of g: exponential (``decay_rate`` delta,
    |g| ~ e^{-delta t}) or algebraic (``decay_power`` p, |g| ~ t^{-p},
    p > 1).  Panels stop once the tail bound drops below ``abs_tol``; for
    algebraic tails the remainder is added as the mean-weight integral
    (1/2 + shift) * integral_K^inf g/t dt minus the first Euler-Maclaurin
    correction.
    """
    def panel_integrand(k):
        def h(t):
            return (t - k + shift) / t * g(t)
        return h

    total = 0.0
    err = 0.0
    evals = 0
    tol = 0.1 * cfg.abs_tol
    for k in range(max_panels):
        v, e, n, ok = _adaptive(panel_integrand(k), float(k), float(k + 1), tol, 1e-14, 200)
        if not ok:
            raise AccuracyError(f"panel [{k}, {k + 1}) did not converge", total, e)
        total += v
        err += e
        evals += n
        edge = float(k + 1)
        g_edge = abs(float(np.asarray(g(np.array([edge])))[0]))
        if decay_power is None:
            bound = g_edge / decay_rate
            if bound < cfg.abs_tol:
                return IntegralResult(total, err + bound, evals)
        elif k >= 20:
            # after the -h(K)/12 term the remainder is O(h'(K)) ~ (p + 1) h(K) / K
            remainder = g_edge / edge * (decay_power + 1.0) / (120.0 * edge)
            if remainder < cfg.abs_tol:
                tail = integrate_semi_infinite(lambda u: g(u + edge) / (u + edge), cfg)
                h_edge = float(np.asarray(g(np.array([edge])))[0]) / edge
                correction = (0.5 + shift) * tail.value - h_edge / 12.0
                return IntegralResult(total + correction, err + tail.error_estimate + remainder,
                                      evals + tail.evaluations)
    raise AccuracyError("fractional-part integral tail bound never met", total, float("inf"))
