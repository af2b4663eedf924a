"""Double-precision Gamma and Beta, plus the exact Gamma-ratio telescope.

Gamma uses the Lanczos approximation with g = 7 and the usual nine
coefficients for x >= 1/2, and the reflection formula below that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError

__all__ = [
    "GammaEval",
    "LANCZOS_COEFFICIENTS",
    "LANCZOS_G",
    "beta_numeric",
    "gamma",
    "gamma_eval",
    "log_gamma",
    "telescope_gamma_ratio",
]

LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_2PI = math.sqrt(2.0 * math.pi)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
# Gamma(171.62...) is the largest finite double
_MAX_ARG = 171.6


@dataclass(frozen=True)
class GammaEval:
    """Gamma at ``argument`` in both linear and log-magnitude form.

    ``value`` is ``sign * inf`` when Gamma exceeds the double range; the
    log form stays finite.
    """

    argument: float
    value: float
    log_value: float
    sign: int


def _check_pole(x: float) -> None:
    if x <= 0 and x == math.floor(x):
        raise PoleError([x], f"Gamma has a pole at {x!r}")


def _sinpi(x: float) -> float:
    """sin(pi x) with the argument reduced to [-1/2, 1/2] first."""
    r = x - 2.0 * round(x / 2.0)  # r in [-1, 1]
    if r > 0.5:
        return math.sin(math.pi * (1.0 - r))
    if r < -0.5:
        return -math.sin(math.pi * (1.0 + r))
    return math.sin(math.pi * r)


def _lanczos_series(z: float) -> float:
    c = LANCZOS_COEFFICIENTS
    acc = c[0]
    for i in range(1, len(c)):
        acc += c[i] / (z + i)
    return acc


def gamma(x: float) -> float:
    """Gamma(x) for real ``x`` off the non-positive integers.

    Raises :class:`PoleError` at 0, -1, -2, ... and ``OverflowError`` when
    the result does not fit in a double.
    """
    x = float(x)
    _check_pole(x)
    if x < 0.5:
        s = _sinpi(x)
        if 1.0 - x > _MAX_ARG:
            lg, _ = log_gamma(1.0 - x)
            return math.copysign(math.exp(_LOG_PI - math.log(abs(s)) - lg), s)
        return math.pi / (s * gamma(1.0 - x))
    if x > _MAX_ARG:
        raise OverflowError(f"Gamma({x}) exceeds double range")
    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    # split the power so t**(z+1/2) cannot overflow before exp(-t) scales it
    half = t ** ((z + 0.5) / 2.0)
    value = _SQRT_2PI * (half * math.exp(-t)) * half * _lanczos_series(z)
    if math.isinf(value):
        raise OverflowError(f"Gamma({x}) exceeds double range")
    return value


def log_gamma(x: float) -> tuple[float, int]:
    """Return ``(log|Gamma(x)|, sign(Gamma(x)))``."""
    x = float(x)
    _check_pole(x)
    if x < 0.5:
        s = _sinpi(x)
        lg, sg = log_gamma(1.0 - x)
        return _LOG_PI - math.log(abs(s)) - lg, (1 if s > 0 else -1) * sg
    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_series(z)), 1


def gamma_eval(x: float) -> GammaEval:
    lg, sign = log_gamma(x)
    try:
        value = gamma(x)
    except OverflowError:
        value = math.copysign(math.inf, sign)
    return GammaEval(float(x), value, lg, sign)


def beta_numeric(p: float, q: float) -> float:
    """B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q), evaluated in log space."""
    p, q = float(p), float(q)
    for arg in (p, q, p + q):
        _check_pole(arg)
    lp, sp = log_gamma(p)
    lq, sq = log_gamma(q)
    lr, sr = log_gamma(p + q)
    return sp * sq * sr * math.exp(lp + lq - lr)


def telescope_gamma_ratio(n: int) -> Fraction:
    """Exact ``Gamma(n + 2 - 1/n) / Gamma(1 - 1/n) = prod_{j=1..n+1} (j - 1/n)``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"need an integer n >= 2, got {n!r}")
    shift = Fraction(1, n)
    ratio = Fraction(1)
    for j in range(1, n + 2):
        ratio *= j - shift
    return ratio
