"""Both sides of the alternating-sum / reciprocal-product identities, exactly.

Every identity handled here is an instance of

    sum_{k=0..n} (-1)^k C(n,k) / (f k + g)  ==  f^n n! prod_{k=0..n} 1 / (f k + g)

for rational ``f`` and ``g``.  The theorem is ``f = n, g = n - 1``; the three
corollary families and the conjecture pick other ``(f, g)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DomainError, PoleError
from .exactnum import as_rational, binomial, factorial, rational_pow

__all__ = [
    "COROLLARY_VARIANTS",
    "CheckResult",
    "IdentityInstance",
    "ProbeResult",
    "alternating_sum",
    "claimed_closed_form_value",
    "conjecture_probe",
    "corollary_check",
    "derivative_reciprocal_product",
    "finite_difference_derivative",
    "integral_exact",
    "reciprocal_product",
    "theorem_check",
]

COROLLARY_VARIANTS = ("1", "2", "3printed", "3corrected")


@dataclass(frozen=True)
class IdentityInstance:
    """Denominators ``f*k + g`` for ``k = 0..n``."""

    n: int
    f: Fraction
    g: Fraction

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"n must be a non-negative integer, got {self.n!r}")
        object.__setattr__(self, "f", as_rational(self.f))
        object.__setattr__(self, "g", as_rational(self.g))

    def denominators(self) -> list[Fraction]:
        return [self.f * k + self.g for k in range(self.n + 1)]

    def poles(self) -> list[int]:
        """Every k in [0, n] where the denominator vanishes."""
        return [k for k, d in enumerate(self.denominators()) if d == 0]

    def validate(self) -> None:
        poles = self.poles()
        if poles:
            raise PoleError(poles)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of comparing the sum side against the product side.

    ``lhs``/``rhs`` are None exactly when ``poles`` is non-empty.  For the
    printed form of corollary 3, the product side uses different
    denominators; those are recorded in ``rhs_instance``.
    """

    instance: IdentityInstance
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    equal: bool
    poles: list[int] = field(default_factory=list)
    rhs_instance: Optional[IdentityInstance] = None


@dataclass(frozen=True)
class ProbeResult:
    instance: IdentityInstance
    sum_value: Optional[Fraction]
    paper_rhs: Optional[Fraction]
    corrected_rhs: Optional[Fraction]
    paper_form_holds: bool
    corrected_form_holds: bool
    poles: list[int] = field(default_factory=list)


def _instance(inst, *args) -> IdentityInstance:
    if isinstance(inst, IdentityInstance):
        if args:
            raise TypeError("pass either an IdentityInstance or (n, f, g)")
        return inst
    return IdentityInstance(inst, *args)


def alternating_sum(inst, *args) -> Fraction:
    """Exact ``sum_{k=0..n} (-1)^k C(n,k) / (f k + g)``.

    Accepts an :class:`IdentityInstance` or the triple ``(n, f, g)``.
    Raises :class:`PoleError` listing all vanishing denominators.
    """
    inst = _instance(inst, *args)
    inst.validate()
    n = inst.n
    total = Fraction(0)
    for k, d in enumerate(inst.denominators()):
        c = binomial(n, k)
        total += (c if k % 2 == 0 else -c) / d
    return total


def _product_side(inst: IdentityInstance, prefactor_base) -> Fraction:
    inst.validate()
    prod = Fraction(1)
    for d in inst.denominators():
        prod *= d
    return rational_pow(prefactor_base, inst.n) * factorial(inst.n) / prod


def reciprocal_product(inst, *args) -> Fraction:
    """Exact ``f^n n! prod_{k=0..n} 1 / (f k + g)``."""
    inst = _instance(inst, *args)
    return _product_side(inst, inst.f)


def _evaluate_pair(lhs_inst, rhs_inst, prefactor_base) -> CheckResult:
    poles = sorted(set(lhs_inst.poles()) | set(rhs_inst.poles()))
    extra = rhs_inst if rhs_inst != lhs_inst else None
    if poles:
        return CheckResult(lhs_inst, None, None, False, poles, extra)
    lhs = alternating_sum(lhs_inst)
    rhs = _product_side(rhs_inst, prefactor_base)
    return CheckResult(lhs_inst, lhs, rhs, lhs == rhs, [], extra)


def theorem_check(n: int) -> CheckResult:
    """Check the theorem instance ``f = n, g = n - 1``.

    n = 1 puts a zero denominator at k = 0 and is reported as a pole;
    n = 0 evaluates to -1 on both sides under 0**0 == 1.
    """
    inst = IdentityInstance(n, n, n - 1)
    return _evaluate_pair(inst, inst, n)


def corollary_check(variant, n: int, a) -> CheckResult:
    """Check one of the corollary families at ``(n, a)``.

    ``variant`` is one of ``"1"``, ``"2"``, ``"3printed"``, ``"3corrected"``.
    ``"3printed"`` keeps the product-side denominators ``a n k + n - 1`` as
    printed, so it generally does not hold; ``"3corrected"`` uses
    ``a n k + a n - 1`` on both sides.
    """
    variant = str(variant)
    if variant not in COROLLARY_VARIANTS:
        raise ValueError(f"unknown corollary variant {variant!r}")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    a = as_rational(a)
    an = a * n
    if variant == "1":
        inst = IdentityInstance(n, n, an - 1)
        return _evaluate_pair(inst, inst, n)
    if variant == "2":
        inst = IdentityInstance(n, an, n - 1)
        return _evaluate_pair(inst, inst, an)
    lhs_inst = IdentityInstance(n, an, an - 1)
    if variant == "3corrected":
        return _evaluate_pair(lhs_inst, lhs_inst, an)
    return _evaluate_pair(lhs_inst, IdentityInstance(n, an, n - 1), an)


def conjecture_probe(n: int, f, g) -> ProbeResult:
    """Compare the sum against both the printed ``n^n`` and the ``f^n`` prefactor."""
    inst = IdentityInstance(n, f, g)
    poles = inst.poles()
    if poles:
        return ProbeResult(inst, None, None, None, False, False, poles)
    s = alternating_sum(inst)
    printed = _product_side(inst, n)
    corrected = _product_side(inst, inst.f)
    return ProbeResult(inst, s, printed, corrected, s == printed, s == corrected)


def integral_exact(n: int) -> Fraction:
    """Exact value of the integral of ``(1 - x)^n x^(-1/n)`` over (0, 1).

    Equals ``n! n^(n+1) / prod_{j=1..n+1} (n j - 1)``; diverges for n < 2.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"integral diverges or is undefined for n={n!r}; need n >= 2")
    prod = 1
    for j in range(1, n + 2):
        prod *= n * j - 1
    return Fraction(factorial(n) * n ** (n + 1), prod)


def _derivative_factors(m: int, n: int, a) -> list[Fraction]:
    if m < 0 or n < 1:
        raise DomainError("need m >= 0 and n >= 1")
    a = as_rational(a)
    factors = [n * k + a * n - 1 for k in range(m + 1)]
    poles = [k for k, c in enumerate(factors) if c == 0]
    if poles:
        raise PoleError(poles)
    return factors


def derivative_reciprocal_product(m: int, n: int, a) -> Fraction:
    """d/da of ``prod_{k=0..m} 1 / (n k + a n - 1)``, exactly.

    Each factor contributes ``-n / c_k^2``, so the derivative is
    ``-n * P * sum(1 / c_k)`` with ``P`` the product itself.
    """
    factors = _derivative_factors(m, n, a)
    p = Fraction(1)
    for c in factors:
        p /= c
    return -n * p * sum(Fraction(1) / c for c in factors)


def claimed_closed_form_value(n: int, a, m: int = 3) -> Fraction:
    """The printed closed form ``n^4 / prod_{k=0..3} (n k + a n - 1)^2``.

    Only the four-factor case is printed, so ``m`` must be 3.
    """
    if m != 3:
        raise DomainError("the printed closed form exists only for m = 3")
    factors = _derivative_factors(m, n, a)
    denom = Fraction(1)
    for c in factors:
        denom *= c * c
    return Fraction(n**4) / denom


def finite_difference_derivative(m: int, n: int, a, h: float = 1e-6) -> float:
    """Central difference ``(P(a+h) - P(a-h)) / 2h`` in double precision."""
    _derivative_factors(m, n, a)
    a = float(as_rational(a))

    def product(x: float) -> float:
        return math.prod(1.0 / (n * k + x * n - 1.0) for k in range(m + 1))

    return (product(a + h) - product(a - h)) / (2.0 * h)
