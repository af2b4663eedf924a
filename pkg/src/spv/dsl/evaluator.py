"""Exact evaluation of expression trees over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..exactnum import as_rational, binomial, factorial
from . import nodes as ast
from .errors import (
    DivisionByZero,
    EvalError,
    InvalidArgument,
    NonIntegerBound,
    NonIntegerExponent,
    UnboundVariable,
)


def _as_int(value: Fraction, node: ast.Node, exc: type, what: str) -> int:
    if value.denominator != 1:
        raise exc(node.span, f"{what} must be an integer, got {value}")
    return value.numerator


def evaluate(node: ast.Node, env: Mapping[str, object] | None = None) -> Fraction:
    """Value of ``node`` with free variables taken from ``env``.

    ``sum``/``prod`` run their variable over the integers ``lower..upper``
    inclusive; an empty range gives 0 or 1.  Failures raise a subclass of
    :class:`EvalError` positioned at the offending node.
    """
    scope = {k: as_rational(v) for k, v in (env or {}).items()}
    try:
        return _eval(node, scope)
    except RecursionError:
        raise EvalError(node.span, "expression nested too deeply") from None


def _eval(node: ast.Node, env: dict[str, Fraction]) -> Fraction:
    if isinstance(node, ast.IntLiteral):
        return Fraction(node.value)
    if isinstance(node, ast.Variable):
        try:
            return env[node.name]
        except KeyError:
            raise UnboundVariable(node.span, f"variable {node.name!r} is not bound") from None
    if isinstance(node, ast.Paren):
        return _eval(node.inner, env)
    if isinstance(node, ast.Neg):
        return -_eval(node.operand, env)
    if isinstance(node, ast.Add):
        return _eval(node.left, env) + _eval(node.right, env)
    if isinstance(node, ast.Sub):
        return _eval(node.left, env) - _eval(node.right, env)
    if isinstance(node, ast.Mul):
        return _eval(node.left, env) * _eval(node.right, env)
    if isinstance(node, ast.Div):
        num = _eval(node.left, env)
        den = _eval(node.right, env)
        if den == 0:
            raise DivisionByZero(node.span, "division by zero")
        return num / den
    if isinstance(node, ast.Pow):
        base = _eval(node.left, env)
        exp = _as_int(_eval(node.right, env), node, NonIntegerExponent, "exponent")
        if base == 0 and exp < 0:
            raise DivisionByZero(node.span, f"zero raised to negative power {exp}")
        return base**exp
    if isinstance(node, ast.Reduction):
        lo = _as_int(_eval(node.lower, env), node, NonIntegerBound, "lower bound")
        hi = _as_int(_eval(node.upper, env), node, NonIntegerBound, "upper bound")
        inner = dict(env)
        if isinstance(node, ast.Sum):
            acc = Fraction(0)
            for i in range(lo, hi + 1):
                inner[node.var] = Fraction(i)
                acc += _eval(node.body, inner)
        else:
            acc = Fraction(1)
            for i in range(lo, hi + 1):
                inner[node.var] = Fraction(i)
                acc *= _eval(node.body, inner)
        return acc
    if isinstance(node, ast.Binom):
        n = _as_int(_eval(node.n, env), node, InvalidArgument, "binom argument")
        k = _as_int(_eval(node.k, env), node, InvalidArgument, "binom argument")
        if n < 0:
            raise InvalidArgument(node.span, f"binom needs n >= 0, got {n}")
        return Fraction(binomial(n, k)) if k >= 0 else Fraction(0)
    if isinstance(node, ast.Fact):
        n = _as_int(_eval(node.arg, env), node, InvalidArgument, "fact argument")
        if n < 0:
            raise InvalidArgument(node.span, f"fact needs a non-negative argument, got {n}")
        return Fraction(factorial(n))
    raise TypeError(f"unknown node {type(node).__name__}")
