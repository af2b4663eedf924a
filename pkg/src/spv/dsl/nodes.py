"""Expression tree for ``.idn`` sources.

Spans are carried for diagnostics but excluded from equality, so two trees
compare equal exactly when they are structurally identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from .errors import SourceSpan

_NO_SPAN = SourceSpan(1, 1, 1)


def _span():
    return field(default=_NO_SPAN, compare=False, repr=False)


class Node:
    span: SourceSpan

    @property
    def children(self) -> tuple["Node", ...]:
        return ()


@dataclass(frozen=True)
class IntLiteral(Node):
    value: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Variable(Node):
    name: str
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    span: SourceSpan = _span()

    @property
    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class Paren(Node):
    inner: Node
    span: SourceSpan = _span()

    @property
    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class BinaryOp(Node):
    left: Node
    right: Node
    span: SourceSpan = _span()
    symbol = "?"

    @property
    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Add(BinaryOp):
    symbol = "+"


@dataclass(frozen=True)
class Sub(BinaryOp):
    symbol = "-"


@dataclass(frozen=True)
class Mul(BinaryOp):
    symbol = "*"


@dataclass(frozen=True)
class Div(BinaryOp):
    symbol = "/"


@dataclass(frozen=True)
class Pow(BinaryOp):
    symbol = "^"


@dataclass(frozen=True)
class Reduction(Node):
    """``sum``/``prod`` of ``body`` as ``var`` runs over ``lower..upper``."""

    body: Node
    var: str
    lower: Node
    upper: Node
    span: SourceSpan = _span()
    name = "?"

    @property
    def children(self):
        return (self.body, self.lower, self.upper)


@dataclass(frozen=True)
class Sum(Reduction):
    name = "sum"


@dataclass(frozen=True)
class Prod(Reduction):
    name = "prod"


@dataclass(frozen=True)
class Binom(Node):
    n: Node
    k: Node
    span: SourceSpan = _span()

    @property
    def children(self):
        return (self.n, self.k)


@dataclass(frozen=True)
class Fact(Node):
    arg: Node
    span: SourceSpan = _span()

    @property
    def children(self):
        return (self.arg,)


CALL_NAMES = frozenset({"sum", "prod", "binom", "fact"})


def free_variables(node: Node, bound: frozenset = frozenset()) -> list[Variable]:
    """Variable occurrences not bound by an enclosing sum/prod, in source order."""
    if isinstance(node, Variable):
        return [] if node.name in bound else [node]
    if isinstance(node, Reduction):
        # bounds are outside the scope of the bound variable
        out = free_variables(node.lower, bound) + free_variables(node.upper, bound)
        return out + free_variables(node.body, bound | {node.var})
    out: list[Variable] = []
    for child in node.children:
        out.extend(free_variables(child, bound))
    return out


def walk(node: Node):
    yield node
    for child in node.children:
        yield from walk(child)
