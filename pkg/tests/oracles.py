"""Independent reference computations used to freeze expected values.

Nothing here imports the package under test.
"""

import math
from fractions import Fraction


def brute_sum(n, f, g):
    f, g = Fraction(f), Fraction(g)
    return sum(Fraction((-1) ** k * math.comb(n, k)) / (f * k + g) for k in range(n + 1))


def brute_product(n, f, g, prefactor=None):
    f, g = Fraction(f), Fraction(g)
    base = f if prefactor is None else Fraction(prefactor)
    denom = Fraction(1)
    for k in range(n + 1):
        denom *= f * k + g
    return base**n * math.factorial(n) / denom


def repeated_multiplication_factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def product_formula_binomial(n, k):
    """prod_{i=1..k} (n - k + i) / i as an exact rational."""
    out = Fraction(1)
    for i in range(1, k + 1):
        out *= Fraction(n - k + i, i)
    return out


def float_reciprocal_product(m, n, a):
    return math.prod(1.0 / (n * k + a * n - 1.0) for k in range(m + 1))


def central_difference(m, n, a, h=1e-6):
    a = float(a)
    return (float_reciprocal_product(m, n, a + h) - float_reciprocal_product(m, n, a - h)) / (2 * h)
