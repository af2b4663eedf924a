import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import product_formula_binomial, repeated_multiplication_factorial
from spv.errors import ZeroToNegativePower
from spv.exactnum import as_rational, binomial, factorial, format_rational, parse_rational, rational_pow


def test_binomial_small():
    assert binomial(5, 2) == 10
    assert binomial(0, 0) == 1
    assert binomial(3, 7) == 0


@pytest.mark.parametrize("n", [0, 1, 7, 100])
def test_binomial_row_edge(n):
    assert binomial(n, 0) == 1


def test_binomial_50_25_against_product_formula():
    expected = product_formula_binomial(50, 25)
    assert expected.denominator == 1
    assert binomial(50, 25) == expected.numerator == 126410606437752


def test_binomial_symmetry_and_pascal():
    for n in range(101):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n, n - k)
            if 1 <= k < n:
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_alternating_row_sum():
    assert sum((-1) ** k * binomial(0, k) for k in range(1)) == 1
    for n in range(1, 101):
        assert sum((-1) ** k * binomial(n, k) for k in range(n + 1)) == 0


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(20) == repeated_multiplication_factorial(20) == 2432902008176640000
    for n in range(1, 51):
        assert factorial(n) == n * factorial(n - 1)


@pytest.mark.parametrize(
    "base, exp, expected",
    [(Fraction(2, 3), 3, Fraction(8, 27)), (0, 0, 1), (5, -2, Fraction(1, 25)), (Fraction(-1, 2), -3, -8)],
)
def test_rational_pow(base, exp, expected):
    assert rational_pow(base, exp) == expected


def test_zero_to_negative_power():
    with pytest.raises(ZeroToNegativePower):
        rational_pow(0, -1)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_canonical_form_after_arithmetic(p1, q1, p2, q2):
    x, y = Fraction(p1, q1), Fraction(p2, q2)
    for r in (x + y, x - y, x * y) + ((x / y,) if y else ()):
        assert r.denominator >= 1
        assert math.gcd(abs(r.numerator), r.denominator) == 1
    assert (x - x).numerator == 0 and (x - x).denominator == 1


def test_parse_and_format():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == 7
    assert format_rational(Fraction(4, 2)) == "2/1"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    for bad in ("1.5", "1/0", "", "a/b", "1e3"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_as_rational_rejects_float():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("3/4") == Fraction(3, 4)
