"""Tanh-sinh quadrature of ``x^(s-1) (1-x)^n`` over (0, 1).

The substitution ``x = (1 + tanh(pi/2 sinh t)) / 2`` sends both endpoints to
infinity in ``t`` with doubly-exponential decay of the weights, which tames
the integrable ``x^(-1/n)`` singularity at the left endpoint.  Both ``x`` and
``1 - x`` are formed directly from ``t`` so neither is ever rounded to 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import DomainError, NoConvergence

__all__ = ["QuadratureResult", "integrand", "level_estimates", "nodes", "tanh_sinh"]

# x ~ exp(-pi sinh(T_MAX)) ~ 1e-37 at the truncation point; the neglected
# tails are far below double precision for every exponent in the family.
T_MAX = 4.0
MAX_LEVEL = 14


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    levels_used: int
    evaluations: int
    estimates: tuple[float, ...] = ()


def _check_n(n) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"need an integer n >= 2, got {n!r}")


def integrand(n: int, x: float) -> float:
    """``(1 - x)^n * x^(-1/n)`` on the open interval (0, 1)."""
    _check_n(n)
    x = float(x)
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    return (1.0 - x) ** n * x ** (-1.0 / n)


def _abscissa(t: float) -> tuple[float, float, float]:
    """Return ``(x, 1 - x, dx/dt)`` at ``t``, each without cancellation."""
    u = 0.5 * math.pi * math.sinh(t)
    # for u < 0: x = 1/(1+e^{-2u}) is the small side
    e = math.exp(-2.0 * abs(u))
    small = e / (1.0 + e)
    large = 1.0 / (1.0 + e)
    x, xc = (large, small) if u >= 0 else (small, large)
    # dx/dt = (pi/4) cosh t / cosh^2 u, with 1/cosh^2 u = 4e/(1+e)^2
    w = math.pi * math.cosh(t) * e / (1.0 + e) ** 2
    return x, xc, w


def nodes(level: int) -> list[tuple[float, float, float]]:
    """All ``(x, 1 - x, w)`` triples of the rule with step ``h = 2^-level``.

    The weight includes ``h``.  Nodes are symmetric about 1/2: the i-th
    ``x`` from the left is the i-th ``1 - x`` from the right.
    """
    h = 2.0**-level
    kmax = int(T_MAX / h)
    out = []
    for k in range(-kmax, kmax + 1):
        x, xc, w = _abscissa(k * h)
        out.append((x, xc, w * h))
    return out


def _family(n: int, exponent: float) -> Callable[[float, float], float]:
    """``x^exponent (1-x)^n`` taking ``(x, 1-x)`` precomputed."""
    return lambda x, xc: xc**n * x**exponent


def _shift_for(n: int, shift) -> float:
    _check_n(n)
    s = 1.0 - 1.0 / n if shift is None else float(shift)
    if s <= 0:
        raise DomainError("integral diverges for shift <= 0")
    return s


def _level_sums(f: Callable[[float, float], float]):
    """Yield ``(estimate, evaluations_so_far)`` for levels 0, 1, 2, ...

    Each level halves the step in ``t``; only the odd multiples of the new
    step are new nodes, the rest are reused.
    """
    evaluations = 0

    def point(t: float) -> float:
        nonlocal evaluations
        x, xc, w = _abscissa(t)
        evaluations += 1
        return w * f(x, xc)

    h = 1.0
    kmax = int(T_MAX)
    raw = sum(point(float(k)) for k in range(-kmax, kmax + 1))
    yield raw * h, evaluations
    while True:
        h *= 0.5
        kmax = int(T_MAX / h)
        raw += sum(point(k * h) for k in range(-kmax, kmax + 1) if k % 2)
        yield raw * h, evaluations


def level_estimates(n: int, max_level: int, *, shift=None) -> list[float]:
    """Estimates for levels ``0..max_level`` without any stopping rule."""
    f = _family(n, _shift_for(n, shift) - 1.0)
    gen = _level_sums(f)
    return [next(gen)[0] for _ in range(max_level + 1)]


def tanh_sinh(
    n: int,
    tol: float = 1e-10,
    max_level: int = 12,
    *,
    shift: Optional[Fraction | float] = None,
) -> QuadratureResult:
    """Integrate ``x^(shift-1) (1-x)^n`` over (0, 1).

    ``shift`` defaults to ``1 - 1/n``.  Levels are refined until two
    successive estimates differ by at most ``tol``.  Raises
    :class:`NoConvergence` (carrying the partial result) if ``max_level``
    is reached first.
    """
    s = _shift_for(n, shift)
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not 1 <= max_level <= MAX_LEVEL:
        raise ValueError(f"max_level must be in 1..{MAX_LEVEL}")
    gen = _level_sums(_family(n, s - 1.0))
    est, evaluations = next(gen)
    estimates = [est]
    err = math.inf
    level = 0
    while level < max_level:
        level += 1
        est, evaluations = next(gen)
        estimates.append(est)
        err = abs(estimates[-1] - estimates[-2])
        if err <= tol:
            break
    result = QuadratureResult(estimates[-1], err, level, evaluations, tuple(estimates))
    if err > tol:
        raise NoConvergence(
            f"no convergence to tol={tol:g} within {max_level} levels (last difference {err:.3g})",
            result,
        )
    return result
