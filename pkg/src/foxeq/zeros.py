"""Nontrivial zeta zeros: table ingestion and the zero-sum expansions.

Zeros are read from a text file (one ordinate gamma per line, rho = 1/2 +
i gamma) and certified at load time; they are never computed from scratch.
Every sum over rho pairs each zero with its conjugate, so a pair
contributes twice the real part of the rho term.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

import numpy as np

from .complexfun import DEFAULT_ZETA, ZetaConfig, loggamma_c, zeta_and_prime, zeta_c, zeta_real
from .errors import DomainError, PrecisionError, ZeroTableFormatError, ZeroValidationError

__all__ = [
    "ZeroTable",
    "ZeroSumConfig",
    "ZEROS_ENV_VAR",
    "default_zeros_path",
    "load_zeros",
    "hardy_z",
    "locate_zero",
    "zero_pair_terms",
    "zero_sum_f",
    "waldvogel_zero_terms",
    "waldvogel_rhs",
    "alternating_zeta_series",
]

ZEROS_ENV_VAR = "FOX_ZEROS_PATH"
FIRST_ORDINATE = 14.134725
_ZERO_TOL = 1e-6
_MIN_DIGITS = 10


@dataclass(frozen=True)
class ZeroTable:
    ordinates: np.ndarray
    zeta_prime_values: np.ndarray
    source_path: str

    def __len__(self):
        return len(self.ordinates)

    @property
    def zeros(self) -> np.ndarray:
        return 0.5 + 1j * self.ordinates

    def head(self, count: int) -> "ZeroTable":
        """The first ``count`` zeros as a new table."""
        count = min(int(count), len(self))
        return ZeroTable(self.ordinates[:count], self.zeta_prime_values[:count], self.source_path)


@dataclass(frozen=True)
class ZeroSumConfig:
    max_zeros: int = 30
    series_max_k: int = 100

    def __post_init__(self):
        if self.max_zeros < 1 or self.series_max_k < 1:
            raise DomainError("ZeroSumConfig fields must be >= 1")


DEFAULT_ZEROS_CFG = ZeroSumConfig()


def default_zeros_path() -> str:
    env = os.environ.get(ZEROS_ENV_VAR)
    if env:
        return env
    return str(resources.files("foxeq") / "data" / "zeros100.txt")


def _significant_digits(token: str) -> int:
    digits = re.sub(r"[^0-9]", "", token.split("e")[0].split("E")[0])
    return len(digits.lstrip("0"))


def load_zeros(path: Optional[str] = None, cfg: ZetaConfig = DEFAULT_ZETA) -> ZeroTable:
    """Read, validate and cache zeta' at a zero-ordinate file.

    Blank lines and lines starting with ``#`` are skipped.  The ordinates
    must be positive, strictly ascending and given to at least ten
    significant digits; each must make |zeta(1/2 + i gamma)| < 1e-6.

    Raises
    ------
    OSError
        The file cannot be read.
    ZeroTableFormatError
        Empty file, unparsable or non-ascending line (with line number).
    ZeroValidationError
        An ordinate is not a zero at working precision.
    """
    path = default_zeros_path() if path is None else str(path)
    text = Path(path).read_text(encoding="utf-8")
    ordinates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = float(line)
        except ValueError:
            raise ZeroTableFormatError(f"not a number: {line!r}", lineno) from None
        if not math.isfinite(value) or value <= 0:
            raise ZeroTableFormatError(f"ordinate must be a positive finite number, got {line!r}", lineno)
        if _significant_digits(line) < _MIN_DIGITS:
            raise ZeroTableFormatError(f"fewer than {_MIN_DIGITS} significant digits: {line!r}", lineno)
        if ordinates and value <= ordinates[-1]:
            raise ZeroTableFormatError(f"ordinates must be strictly ascending ({value} after {ordinates[-1]})",
                                       lineno)
        ordinates.append(value)
    if not ordinates:
        raise ZeroTableFormatError(f"no ordinates in {path}")
    gammas = np.array(ordinates)
    if abs(gammas[0] - FIRST_ORDINATE) > _ZERO_TOL:
        raise ZeroValidationError(f"first ordinate {gammas[0]} is not the first zero {FIRST_ORDINATE}",
                                  float(gammas[0]))
    values, derivs = zeta_and_prime(0.5 + 1j * gammas, cfg)
    bad = np.abs(values) >= _ZERO_TOL
    if np.any(bad):
        g = float(gammas[bad][0])
        raise ZeroValidationError(f"|zeta(1/2 + {g}i)| = {abs(values[bad][0]):.3g} is not a zero", g)
    if np.any(derivs == 0):
        raise ZeroValidationError("zeta' vanishes at a listed zero")
    gammas.setflags(write=False)
    derivs = np.asarray(derivs)
    derivs.setflags(write=False)
    return ZeroTable(gammas, derivs, path)


def hardy_z(t, cfg: ZetaConfig = DEFAULT_ZETA):
    """Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + i t), real for real t."""
    t = np.asarray(t, dtype=float)
    theta = np.imag(loggamma_c(0.25 + 0.5j * t)) - 0.5 * t * math.log(math.pi)
    val = np.real(np.exp(1j * theta) * zeta_c(0.5 + 1j * t, cfg))
    return float(val) if np.ndim(val) == 0 else val


def locate_zero(lo: float, hi: float, tol: float = 1e-12, cfg: ZetaConfig = DEFAULT_ZETA) -> float:
    """Bisection for a sign change of Z on [lo, hi]."""
    z_lo = hardy_z(lo, cfg)
    z_hi = hardy_z(hi, cfg)
    if z_lo == 0:
        return float(lo)
    if z_lo * z_hi > 0:
        raise DomainError(f"no sign change of Z on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        z_mid = hardy_z(mid, cfg)
        if z_mid == 0:
            return mid
        if (z_mid > 0) == (z_lo > 0):
            lo, z_lo = mid, z_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _inv_cos_x_power(x, gammas):
    """x^{-rho} / cos(pi rho / 2) for rho = 1/2 + i gamma, gamma > 0, shape (len(x), len(gammas)).

    cos(pi rho/2) = e^{-i pi/4} e^{pi gamma/2} (1 + i e^{-pi gamma}) / 2, so the
    growing exponential is divided out analytically.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    logx = np.log(x)[:, None]
    g = gammas[None, :]
    return (2.0 * np.exp(-0.5 * logx - 1j * g * logx - 0.5 * math.pi * g + 0.25j * math.pi)
            / (1.0 + 1j * np.exp(-math.pi * g)))


def _take(table: ZeroTable, cfg: ZeroSumConfig):
    if len(table) == 0:
        raise DomainError("zero table is empty")
    count = min(cfg.max_zeros, len(table))
    return table.ordinates[:count], table.zeta_prime_values[:count]


def zero_pair_terms(x, table: ZeroTable, cfg: ZeroSumConfig = DEFAULT_ZEROS_CFG):
    """Per-pair contributions (pi/2) * 2 Re[x^{-rho} / (cos(pi rho/2) zeta'(rho))]."""
    gammas, derivs = _take(table, cfg)
    terms = _inv_cos_x_power(x, gammas) / derivs[None, :]
    return math.pi * terms.real


def zero_sum_f(x, table: ZeroTable, cfg: ZeroSumConfig = DEFAULT_ZEROS_CFG):
    """(pi/2) * sum over zeros of x^{-rho} / (cos(pi rho/2) zeta'(rho)), conjugate-paired."""
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr <= 0):
        raise DomainError("zero_sum_f needs x > 0")
    total = np.array([math.fsum(row) for row in zero_pair_terms(x_arr, table, cfg)])
    return float(total[0]) if x_arr.ndim == 0 else total.reshape(x_arr.shape)


def waldvogel_zero_terms(t, table: ZeroTable, cfg: ZeroSumConfig = DEFAULT_ZEROS_CFG):
    """Per-pair contributions (1/2) * 2 Re[t^{-rho} / (rho cos(pi rho/2) zeta'(rho))]."""
    gammas, derivs = _take(table, cfg)
    rho = 0.5 + 1j * gammas
    terms = _inv_cos_x_power(t, gammas) / (rho * derivs)[None, :]
    return terms.real


def _alternating_odd_zeta(x, cfg, weight_odd):
    """sum_{n>=1} (-1)^n x^{-2n-1} / (w(2n+1) zeta(2n+1)) for x > 1."""
    x = float(x)
    if not x > 1:
        raise DomainError(f"series needs x > 1, got {x}")
    terms = []
    power = 1.0 / x
    x2 = x * x
    bound = float("inf")
    for n in range(1, cfg.series_max_k + 1):
        power /= x2
        term = (-1) ** n * power / (weight_odd(2 * n + 1) * zeta_real(2 * n + 1))
        terms.append(term)
        bound = abs(term) / x2  # alternating: next term bounds the error
        if bound < 1e-17 * abs(math.fsum(terms)):
            break
    total = math.fsum(terms)
    if bound > 1e-12 * max(1.0, abs(total)):
        raise PrecisionError(f"odd-zeta series at x = {x} not converged within "
                             f"{cfg.series_max_k} terms", bound)
    return total


def alternating_zeta_series(x: float, cfg: ZeroSumConfig = DEFAULT_ZEROS_CFG) -> float:
    """sum_{k>=1} (-1)^k x^{-2k-1} / zeta(2k+1), for x > 1.

    This is the closed form of the sine transform of the Mobius-exponential
    series; the k = 0 term is absent because 1/zeta(1) = 0.
    """
    return _alternating_odd_zeta(x, cfg, lambda m: 1.0)


def waldvogel_rhs(t: float, table: ZeroTable, cfg: ZeroSumConfig = DEFAULT_ZEROS_CFG) -> float:
    """Zero expansion of R(e^{-2 pi t}) for t > 1.

    (1/pi) sum_n (-1)^{n-1} t^{-2n-1} / ((2n+1) zeta(2n+1))
    + (1/2) sum_rho t^{-rho} / (rho cos(pi rho/2) zeta'(rho)).
    The odd-zeta series diverges for t <= 1, so that range is rejected.
    """
    t = float(t)
    if not t > 1:
        raise DomainError(f"waldvogel_rhs needs t > 1 (the odd-zeta series diverges), got {t}")
    series = -_alternating_odd_zeta(t, cfg, lambda m: m) / math.pi
    zero_part = math.fsum(waldvogel_zero_terms(t, table, cfg)[0])
    return series + zero_part
