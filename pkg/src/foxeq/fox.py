"""Fox's integral equation with product kernels k(xt).

Two equation shapes are handled:

* the Fox form  Delta(x) = f(x) + w * int_0^inf k(xt) Delta(b t) dt  with an
  optional kernel weight w and argument scale b (b = 1, w = 1 is the plain
  equation; b = 2 pi, w = 2 is the series/functional-equation setting), and
* the modified form  pi Delta(a x) = -f(x) + int_0^inf sin(xt) Delta(t) dt,
  whose closed-form solution breaks down at a = 2 pi.

Functions here are vectorised callables of a real array, as everywhere in
foxeq.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np

from .complexfun import DEFAULT_ZETA, ZetaConfig, gamma_c, sin_pi, zeta_c
from .errors import DomainError, SingularConfigurationError
from .quadrature import (
    DEFAULT_QUAD,
    ContourSpec,
    IntegralResult,
    QuadratureConfig,
    fourier_cosine_transform,
    fourier_sine_transform,
    inverse_mellin_line,
)

__all__ = [
    "Kernel",
    "FoxProblem",
    "MellinPair",
    "SINGULAR_THRESHOLD",
    "kernel_mellin",
    "fox_general_solution",
    "modified_fox_solution",
    "modified_fox_solution_function",
    "modified_fox_residual",
    "fox_residual",
    "series_inhomogeneity",
    "proposition_transform_check",
]

SINGULAR_THRESHOLD = 1e-9


class Kernel(str, enum.Enum):
    SINE = "sine"
    COSINE = "cosine"

    def transform(self, f, x, cfg):
        if self is Kernel.SINE:
            return fourier_sine_transform(f, x, cfg)
        return fourier_cosine_transform(f, x, cfg)


@dataclass(frozen=True)
class MellinPair:
    """A Mellin transform together with its open strip of validity."""

    fbar: Callable
    strip: Tuple[float, float]

    def __post_init__(self):
        lo, hi = self.strip
        if not lo < hi:
            raise DomainError(f"empty Mellin strip {self.strip}")

    def contains(self, c: float) -> bool:
        return self.strip[0] < c < self.strip[1]

    def __call__(self, s):
        return self.fbar(s)


def kernel_mellin(kernel=Kernel.SINE, weight: float = 1.0) -> MellinPair:
    """Mellin transform of w*sin(x) (strip (-1, 1)) or w*cos(x) (strip (0, 1))."""
    kernel = Kernel(kernel)
    if kernel is Kernel.SINE:
        return MellinPair(lambda s: weight * gamma_c(s) * sin_pi(np.asarray(s) / 2.0), (-1.0, 1.0))
    return MellinPair(lambda s: weight * gamma_c(s) * sin_pi(np.asarray(s) / 2.0 + 0.5), (0.0, 1.0))


@dataclass(frozen=True)
class FoxProblem:
    """The modified equation pi Delta(a x) = -f(x) + int k(xt) Delta(t) dt."""

    f: Callable
    kernel: Kernel = Kernel.SINE
    a: float = 1.0
    sine_transform: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError("scale a must be > 0")
        object.__setattr__(self, "kernel", Kernel(self.kernel))

    def solution(self, x, cfg: QuadratureConfig = DEFAULT_QUAD):
        if self.kernel is not Kernel.SINE:
            raise DomainError("the closed-form solution exists for the sine kernel only")
        return modified_fox_solution(self.f, self.a, x, cfg, sine_transform=self.sine_transform)

    def residual(self, delta, x, cfg: QuadratureConfig = DEFAULT_QUAD):
        return modified_fox_residual(delta, self.f, self.a, x, cfg, kernel=self.kernel)


def fox_general_solution(fpair: MellinPair, kpair: MellinPair, spec: ContourSpec, x: float,
                         scale: float = 1.0) -> IntegralResult:
    """Mellin-inversion solution of Delta(x) = f(x) + int k(xt) Delta(scale t) dt.

    Delta is recovered as the inverse Mellin transform of

        [fbar(s) + kbar(s) scale^{s-1} fbar(1-s)] / [1 - kbar(s) kbar(1-s) / scale]

    along Re(s) = c.  With scale = 1 this is the textbook formal solution.

    Raises
    ------
    DomainError
        c or 1 - c lies outside one of the strips.
    SingularConfigurationError
        The denominator comes within 1e-9 of zero on the contour.
    """
    c = spec.abscissa_c
    for name, pair in (("f", fpair), ("k", kpair)):
        if not (pair.contains(c) and pair.contains(1.0 - c)):
            raise DomainError(f"abscissa {c} and {1 - c} must both lie in the {name} strip {pair.strip}")
    if not scale > 0:
        raise DomainError("scale must be > 0")
    log_scale = math.log(scale)

    def denominator(s):
        return 1.0 - kpair(s) * kpair(1.0 - s) / scale

    probe = c + 1j * np.linspace(-spec.height_T, spec.height_T, 4 * spec.panels + 1)
    worst = float(np.min(np.abs(denominator(probe))))
    if worst < SINGULAR_THRESHOLD:
        raise SingularConfigurationError(
            f"1 - kbar(s) kbar(1-s) / scale vanishes on Re(s) = {c} (min modulus {worst:.3g})")

    def integrand(s):
        num = fpair(s) + kpair(s) * np.exp((s - 1.0) * log_scale) * fpair(1.0 - s)
        return num / denominator(s)

    return inverse_mellin_line(integrand, spec, x)


def _modified_denominator(a):
    denom = math.pi ** 2 - a * math.pi / 2.0
    if abs(denom) < SINGULAR_THRESHOLD:
        raise SingularConfigurationError(
            f"pi^2 - a pi/2 = {denom:.3g}: the closed-form solution is singular at a = 2 pi")
    return denom


def modified_fox_solution(f: Callable, a: float, x, cfg: QuadratureConfig = DEFAULT_QUAD, *,
                          sine_transform: Optional[Callable] = None):
    """Closed-form solution of pi Delta(a x) = -f(x) + int_0^inf sin(xt) Delta(t) dt:

        Delta(x) = [-pi f(x/a) - a S(x)] / (pi^2 - a pi/2),  S(x) = int sin(xt) f(t) dt.

    ``sine_transform`` may supply S in closed form; otherwise it is computed
    by oscillatory quadrature, one point at a time.
    """
    if not a > 0:
        raise DomainError("a must be > 0")
    denom = _modified_denominator(a)
    x_arr = np.asarray(x, dtype=float)
    xf = np.atleast_1d(x_arr)
    if sine_transform is not None:
        s_vals = np.asarray(sine_transform(xf), dtype=float)
    else:
        s_vals = np.array([fourier_sine_transform(f, xi, cfg).value for xi in xf])
    out = (-math.pi * np.asarray(f(xf / a), dtype=float) - a * s_vals) / denom
    return float(out[0]) if x_arr.ndim == 0 else out.reshape(x_arr.shape)


def modified_fox_solution_function(f: Callable, a: float, cfg: QuadratureConfig = DEFAULT_QUAD, *,
                                   sine_transform: Optional[Callable] = None) -> Callable:
    """The closed-form solution as a vectorised callable."""
    _modified_denominator(a)
    return lambda t: modified_fox_solution(f, a, t, cfg, sine_transform=sine_transform)


def modified_fox_residual(delta: Callable, f: Callable, a: float, x: float,
                          cfg: QuadratureConfig = DEFAULT_QUAD, *, kernel=Kernel.SINE,
                          transform: Optional[float] = None) -> float:
    """pi Delta(a x) + f(x) - int_0^inf k(xt) Delta(t) dt.

    ``transform`` short-circuits the quadrature with a known value of the
    integral.  Raises AccuracyError if the transform does not converge.
    """
    if not x > 0:
        raise DomainError("x must be > 0")
    if transform is None:
        transform = Kernel(kernel).transform(delta, x, cfg).value
    lhs = math.pi * _scalar(delta, a * x)
    return lhs + _scalar(f, x) - transform


def fox_residual(delta: Callable, f: Callable, kernel, x: float, cfg: QuadratureConfig = DEFAULT_QUAD, *,
                 scale: float = 1.0, weight: float = 1.0) -> float:
    """Delta(x) - f(x) - weight * int_0^inf k(xt) Delta(scale t) dt."""
    if not x > 0:
        raise DomainError("x must be > 0")
    transform = Kernel(kernel).transform(lambda t: delta(scale * t), x, cfg).value
    return _scalar(delta, x) - _scalar(f, x) - weight * transform


def series_inhomogeneity(hbar_at_one: float, h_at_zero: float) -> Callable:
    """hbar(1)/x - h(0+)/2, the inhomogeneity making sum_n h(nx) solve the weighted sine equation."""
    return lambda x: hbar_at_one / np.asarray(x, dtype=float) - 0.5 * h_at_zero


def proposition_transform_check(hbar: Callable, kbar: Callable, s, cfg: ZetaConfig = DEFAULT_ZETA) -> float:
    """Relative residual of hbar(s) zeta(s) = (2 pi)^{s-1} kbar(s) zeta(1-s) hbar(1-s)."""
    s = complex(s)
    if s in (0.0, 1.0):
        raise DomainError(f"s = {s} meets a pole of zeta(s) or zeta(1-s)")
    lhs = complex(hbar(s)) * zeta_c(s, cfg)
    rhs = (2.0 * math.pi) ** (s - 1.0) * complex(kbar(s)) * zeta_c(1.0 - s, cfg) * complex(hbar(1.0 - s))
    if lhs == 0:
        raise DomainError("left side vanishes; relative residual undefined")
    return float(abs(lhs - rhs) / abs(lhs))


def _scalar(fn, x):
    return float(np.asarray(fn(np.array([float(x)])), dtype=float)[0])
