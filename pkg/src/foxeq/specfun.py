"""Real special and arithmetic functions.

Mobius sieve, fractional part, sine integral, the Gram series for Riemann's
R function and the Mobius-exponential series

    Delta(y) = sum_{n>=1} mu(n)/n exp(-y/n).

R(e^u) and Delta(y) are evaluated through their entire power series in u
(resp. y).  Both series have alternating-sign terms for the arguments of
interest, so the leading Mobius terms are summed in closed form
(``GramSeriesConfig.resummed_head``) and only the tail coefficients
``sum_{n>head} mu(n) n^{-k-1}`` enter the power series.  This keeps the
peak term near exp(|u| / (head + 1)) instead of exp(|u|).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special as sp_special

from .complexfun import zeta_real
from .errors import DomainError, PrecisionError

__all__ = [
    "MobiusTable",
    "GramSeriesConfig",
    "mobius_sieve",
    "fractional_part",
    "sine_integral",
    "riemann_R_exp",
    "mobius_exponential",
    "mobius_exponential_direct",
]

_EPS = np.finfo(float).eps
_EULER_GAMMA = float(np.euler_gamma)
# Mobius table length used for the tail coefficients
_TAIL_LIMIT = 100_000


@dataclass(frozen=True)
class MobiusTable:
    """mu(1..limit); ``values[0]`` is a placeholder 0."""

    limit: int
    values: np.ndarray

    def __getitem__(self, n):
        if not 1 <= n <= self.limit:
            raise IndexError(f"mu({n}) outside table 1..{self.limit}")
        return int(self.values[n])

    def __len__(self):
        return self.limit

    def mertens(self, n=None):
        n = self.limit if n is None else n
        return int(self.values[1:n + 1].sum())


def mobius_sieve(limit: int) -> MobiusTable:
    """Linear (Euler) sieve for the Mobius function up to ``limit``."""
    limit = int(limit)
    if limit < 1:
        raise DomainError("mobius_sieve needs limit >= 1")
    mu = [0] * (limit + 1)
    mu[1] = 1
    composite = bytearray(limit + 1)
    primes = []
    for i in range(2, limit + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    values = np.array(mu, dtype=np.int8)
    values.setflags(write=False)
    return MobiusTable(limit, values)


@lru_cache(maxsize=4)
def _cached_mobius(limit):
    return mobius_sieve(limit)


def fractional_part(t):
    """t - floor(t), in [0, 1)."""
    t = np.asarray(t, dtype=float)
    out = t - np.floor(t)
    out = np.where(out >= 1.0, 0.0, out)
    return float(out) if out.ndim == 0 else out


def _si_series(x):
    # sum_k (-1)^k x^{2k+1} / ((2k+1)(2k+1)!) ; fine for |x| <= 2
    x2 = x * x
    term = x.copy()
    total = x.copy()
    for k in range(1, 20):
        term = -term * x2 / ((2 * k) * (2 * k + 1))
        total = total + term / (2 * k + 1)
    return total


def _si_continued_fraction(x):
    # E1(ix) by modified Lentz, then Si = pi/2 + Im(e^{-ix} h)
    tiny = 1e-300
    b = 1.0 + 1j * x
    c = np.full_like(b, 1.0 / tiny)
    d = 1.0 / b
    h = d.copy()
    done = np.zeros(x.shape, dtype=bool)
    for i in range(2, 400):
        a = -float((i - 1) ** 2)
        b = b + 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h = np.where(done, h, h * delta)
        done |= np.abs(delta - 1.0) < 1e-16
        if done.all():
            break
    h = h * (np.cos(x) - 1j * np.sin(x))
    return 0.5 * np.pi + h.imag


def sine_integral(x):
    """Si(x) = integral_0^x sin(u)/u du (odd extension for x < 0)."""
    x = np.asarray(x, dtype=float)
    xf = np.atleast_1d(x)
    ax = np.abs(xf)
    out = np.empty_like(ax)
    small = ax <= 2.0
    out[small] = _si_series(ax[small])
    if np.any(~small):
        out[~small] = _si_continued_fraction(ax[~small])
    out = np.copysign(out, xf)
    out = out.reshape(x.shape)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class GramSeriesConfig:
    """Truncation and cancellation policy for the R and Delta power series.

    ``resummed_head = 0`` gives the plain Gram series with 1/zeta(k+1)
    coefficients.  ``loss_budget`` bounds the rounding error, relative to
    max(1, |result|), that an evaluation may carry before PrecisionError.
    """

    max_terms: int = 200
    term_tolerance: float = 1e-16
    resummed_head: int = 30
    loss_budget: float = 1e-9

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if not self.term_tolerance > 0:
            raise DomainError("term_tolerance must be > 0")
        if not 0 <= self.resummed_head < 1000:
            raise DomainError("resummed_head must lie in [0, 1000)")


DEFAULT_GRAM = GramSeriesConfig()


@lru_cache(maxsize=8)
def _tail_coefficients(head, k_max):
    """r_k = sum_{n > head} mu(n) n^{-k-1} for k = 1..k_max (index 0 unused)."""
    r = np.zeros(k_max + 1)
    if head == 0:
        for k in range(1, k_max + 1):
            r[k] = 1.0 / zeta_real(k + 1)
        return r
    mu = _cached_mobius(_TAIL_LIMIT).values
    n_head = np.arange(1, head + 1)
    mu_head = mu[1:head + 1].astype(float)
    n_tail = np.arange(head + 1, _TAIL_LIMIT + 1)
    mu_tail = mu[head + 1:].astype(float)
    keep = mu_tail != 0
    n_tail = n_tail[keep].astype(float)
    mu_tail = mu_tail[keep]
    log_tail = np.log(n_tail)
    for k in range(1, k_max + 1):
        if k <= 3:
            # the truncated table is not accurate enough here; subtract from 1/zeta
            head_sum = math.fsum(mu_head * n_head.astype(float) ** (-(k + 1)))
            r[k] = 1.0 / zeta_real(k + 1) - head_sum
        else:
            r[k] = math.fsum(mu_tail * np.exp(-(k + 1) * log_tail))
    return r


def _head_mobius(head):
    mu = _cached_mobius(max(head, 1)).values
    n = np.arange(1, head + 1)
    m = mu[1:head + 1]
    keep = m != 0
    return n[keep].astype(float), m[keep].astype(float)


def _power_tail(z, coeffs, cfg, weight_k):
    """sum_{k>=1} z^k c_k / (k! * weight_k(k)); returns (sum, sum of |terms|, last |term|)."""
    total = np.zeros_like(z)
    mag = np.zeros_like(z)
    power = np.ones_like(z)  # z^k / k!
    last = np.zeros_like(z)
    active = np.ones(z.shape, dtype=bool)
    az = np.abs(z)
    for k in range(1, cfg.max_terms + 1):
        power = power * z / k
        term = power * coeffs[k] / weight_k(k)
        term = np.where(active, term, 0.0)
        total = total + term
        mag = mag + np.abs(term)
        last = np.where(active, np.abs(term), last)
        # only stop once terms are past their peak
        past_peak = k > az / (1.0 + cfg.resummed_head)
        small = np.abs(term) <= cfg.term_tolerance * np.maximum(np.abs(total), 1e-300)
        active &= ~(past_peak & small)
        if not active.any():
            break
    return total, mag, last


def _gram_head_term(z):
    """G(z) = sum_{k>=1} z^k/(k k!) = Ei(z) - gamma - ln|z|."""
    out = np.zeros_like(z)
    az = np.abs(z)
    small = (az <= 1.0) & (az > 0)
    zs = z[small]
    term = np.ones_like(zs)
    acc = np.zeros_like(zs)
    for k in range(1, 40):
        term = term * zs / k
        acc = acc + term / k
    out[small] = acc
    pos = z > 1.0
    out[pos] = sp_special.expi(z[pos]) - _EULER_GAMMA - np.log(z[pos])
    neg = z < -1.0
    w = -z[neg]
    out[neg] = -(sp_special.exp1(w) + _EULER_GAMMA + np.log(w))
    return out


def _coeff_terms(cfg):
    return _tail_coefficients(cfg.resummed_head, cfg.max_terms)


def riemann_R_exp(u, cfg: GramSeriesConfig = DEFAULT_GRAM):
    """Riemann's R(e^u) from the Gram series 1 + sum_k u^k / (k k! zeta(k+1)).

    Accepts scalars or arrays.  Raises PrecisionError when the estimated
    cancellation loss exceeds ``cfg.loss_budget``.
    """
    u = np.asarray(u, dtype=float)
    uf = np.atleast_1d(u).ravel()
    coeffs = _coeff_terms(cfg)
    total, mag, last = _power_tail(uf, coeffs, cfg, lambda k: k)
    result = 1.0 + total
    loss = _EPS * (mag + 1.0)
    if cfg.resummed_head:
        ns, mus = _head_mobius(cfg.resummed_head)
        for n, m in zip(ns, mus):
            g = _gram_head_term(uf / n)
            result = result + m / n * g
            loss = loss + _EPS * 4 * np.abs(g) / n
    _enforce_budget(uf, result, loss, last, cfg, "riemann_R_exp", "u")
    result = result.reshape(u.shape)
    return float(result) if result.ndim == 0 else result


def mobius_exponential(y, cfg: GramSeriesConfig = DEFAULT_GRAM):
    """Delta(y) = sum_n mu(n)/n e^{-y/n} via sum_{k>=1} (-y)^k / (k! zeta(k+1)).

    Defined here for y >= 0.  Delta(0) = 0 exactly.
    """
    y = np.asarray(y, dtype=float)
    yf = np.atleast_1d(y).ravel()
    if np.any(yf < 0):
        raise DomainError("mobius_exponential is evaluated for y >= 0 only")
    coeffs = _coeff_terms(cfg)
    total, mag, last = _power_tail(-yf, coeffs, cfg, lambda k: 1.0)
    result = total
    loss = _EPS * mag
    if cfg.resummed_head:
        ns, mus = _head_mobius(cfg.resummed_head)
        for n, m in zip(ns, mus):
            result = result + m / n * np.expm1(-yf / n)
            loss = loss + _EPS / n
    _enforce_budget(yf, result, loss, last, cfg, "mobius_exponential", "y")
    result = result.reshape(y.shape)
    return float(result) if result.ndim == 0 else result


def _enforce_budget(arg, result, loss, last, cfg, name, symbol):
    scale = np.maximum(1.0, np.abs(result))
    rel_loss = loss / scale
    bad = rel_loss > cfg.loss_budget
    if np.any(bad):
        i = int(np.argmax(rel_loss))
        raise PrecisionError(
            f"{name}({symbol}={arg[i]:g}): estimated cancellation loss {loss[i]:.3g} "
            f"exceeds budget {cfg.loss_budget:g}", estimated_loss=float(loss[i]))
    unconverged = last > np.maximum(cfg.loss_budget, 1e3 * cfg.term_tolerance) * scale
    if np.any(unconverged):
        i = int(np.argmax(last))
        raise PrecisionError(
            f"{name}({symbol}={arg[i]:g}): series not converged after {cfg.max_terms} terms",
            estimated_loss=float(last[i]))


def mobius_exponential_direct(y, limits=(100_000, 200_000)):
    """Slow oracle: partial sums sum_{n<=N} mu(n)/n e^{-y/n} averaged over N in ``limits``.

    The Mobius series converges only conditionally; averaging a few cutoffs
    damps the oscillation of the tail.
    """
    y = np.asarray(y, dtype=float)
    mu = _cached_mobius(max(limits)).values
    estimates = []
    for limit in limits:
        n = np.arange(1, limit + 1, dtype=float)
        m = mu[1:limit + 1]
        keep = m != 0
        n, m = n[keep], m[keep].astype(float)
        vals = [math.fsum(m / n * np.exp(-yy / n)) for yy in np.atleast_1d(y).ravel()]
        estimates.append(np.array(vals))
    out = np.mean(estimates, axis=0).reshape(y.shape)
    return float(out) if out.ndim == 0 else out
