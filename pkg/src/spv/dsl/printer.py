"""Render trees back to ``.idn`` text that reparses to the same tree.

Parentheses live in the tree as ``Paren`` nodes, so printing never has to
invent or drop any.
"""

from __future__ import annotations

from . import nodes as ast
from .parser import IntRange


def pretty(node: ast.Node) -> str:
    if isinstance(node, ast.IntLiteral):
        return str(node.value)
    if isinstance(node, ast.Variable):
        return node.name
    if isinstance(node, ast.Paren):
        return f"({pretty(node.inner)})"
    if isinstance(node, ast.Neg):
        return f"-{pretty(node.operand)}"
    if isinstance(node, ast.Pow):
        return f"{pretty(node.left)}^{pretty(node.right)}"
    if isinstance(node, ast.BinaryOp):
        return f"{pretty(node.left)} {node.symbol} {pretty(node.right)}"
    if isinstance(node, ast.Reduction):
        parts = (pretty(node.body), node.var, pretty(node.lower), pretty(node.upper))
        return f"{node.name}({', '.join(parts)})"
    if isinstance(node, ast.Binom):
        return f"binom({pretty(node.n)}, {pretty(node.k)})"
    if isinstance(node, ast.Fact):
        return f"fact({pretty(node.arg)})"
    raise TypeError(f"unknown node {type(node).__name__}")


def _pretty_binding(b) -> str:
    if isinstance(b.domain, IntRange):
        return f"{b.name} in {b.domain.lo}..{b.domain.hi}"
    return f"{b.name} in {{{', '.join(str(v) for v in b.domain)}}}"


def pretty_assertion(a) -> str:
    text = f"assert {pretty(a.lhs)} == {pretty(a.rhs)}"
    if a.bindings:
        text += " for " + ", ".join(_pretty_binding(b) for b in a.bindings)
    return text + ";"


def pretty_file(assertions) -> str:
    return "".join(pretty_assertion(a) + "\n" for a in assertions)
