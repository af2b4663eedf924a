"""Recursive-descent parser for ``.idn`` files.

Grammar::

    file      := { assertion } ;
    assertion := "assert" expr "==" expr [ "for" binding { "," binding } ] ";" ;
    binding   := IDENT "in" ( INT ".." INT | "{" rat { "," rat } "}" ) ;
    rat       := [ "-" ] INT [ "/" INT ] ;
    expr      := term { ("+"|"-") term } ;
    term      := unary { ("*"|"/") unary } ;
    unary     := [ "-" ] power ;
    power     := atom [ "^" unary ] ;
    atom      := INT | IDENT | call | "(" expr ")" ;
    call      := ("sum"|"prod") "(" expr "," IDENT "," expr "," expr ")"
               | "binom" "(" expr "," expr ")"
               | "fact" "(" expr ")" ;
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import nodes as ast
from .errors import DslSyntaxError, ParseError, SourceSpan
from .lexer import Token, TokenKind, scan

K = TokenKind


@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int

    def values(self) -> list[Fraction]:
        return [Fraction(v) for v in range(self.lo, self.hi + 1)]


@dataclass(frozen=True)
class Binding:
    name: str
    domain: Union[IntRange, tuple]
    span: SourceSpan = field(default=SourceSpan(1, 1, 1), compare=False, repr=False)

    def values(self) -> list[Fraction]:
        if isinstance(self.domain, IntRange):
            return self.domain.values()
        return list(self.domain)


@dataclass(frozen=True)
class Assertion:
    lhs: ast.Node
    rhs: ast.Node
    bindings: tuple[Binding, ...] = ()
    span: SourceSpan = field(default=SourceSpan(1, 1, 1), compare=False, repr=False)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind is not K.EOF:
            self.pos += 1
        return t

    def error(self, *expected: str) -> ParseError:
        return ParseError(self.tok.span, expected, self.tok.describe())

    def expect(self, kind: TokenKind, what: str | None = None) -> Token:
        if self.tok.kind is not kind:
            raise self.error(what or repr(kind.value))
        return self.advance()

    # file / assertion / bindings

    def assertion(self) -> Assertion:
        start = self.expect(K.ASSERT, "'assert'")
        lhs = self.expr()
        self.expect(K.EQEQ)
        rhs = self.expr()
        bindings: list[Binding] = []
        if self.tok.kind is K.FOR:
            self.advance()
            bindings.append(self.binding())
            while self.tok.kind is K.COMMA:
                self.advance()
                bindings.append(self.binding())
        elif self.tok.kind is not K.SEMI:
            raise self.error("'for'", "';'")
        self.expect(K.SEMI)
        result = Assertion(lhs, rhs, tuple(bindings), start.span)
        _check_scoping(result)
        return result

    def binding(self) -> Binding:
        name = self.identifier()
        self.expect(K.IN, "'in'")
        if self.tok.kind is K.INT:
            lo = self.advance().value
            self.expect(K.DOTDOT)
            hi = self.expect(K.INT, "integer").value
            return Binding(name.text, IntRange(lo, hi), name.span)
        if self.tok.kind is K.LBRACE:
            self.advance()
            values = [self.rat()]
            while self.tok.kind is K.COMMA:
                self.advance()
                values.append(self.rat())
            self.expect(K.RBRACE)
            return Binding(name.text, tuple(values), name.span)
        raise self.error("integer range", "'{'")

    def rat(self) -> Fraction:
        sign = 1
        if self.tok.kind is K.MINUS:
            self.advance()
            sign = -1
        p = self.expect(K.INT, "integer").value
        q = 1
        if self.tok.kind is K.SLASH:
            self.advance()
            if self.tok.kind is K.INT and self.tok.value == 0:
                raise ParseError(self.tok.span, (), message="zero denominator in rational literal")
            q = self.expect(K.INT, "integer").value
        return Fraction(sign * p, q)

    def identifier(self) -> Token:
        t = self.tok
        if t.kind is not K.IDENT:
            raise self.error("identifier")
        if t.text in ast.CALL_NAMES:
            raise ParseError(t.span, ("identifier",), t.describe(), f"{t.text!r} is reserved")
        return self.advance()

    # expressions

    def expr(self) -> ast.Node:
        node = self.term()
        while self.tok.kind in (K.PLUS, K.MINUS):
            op = self.advance()
            cls = ast.Add if op.kind is K.PLUS else ast.Sub
            node = cls(node, self.term(), op.span)
        return node

    def term(self) -> ast.Node:
        node = self.unary()
        while self.tok.kind in (K.STAR, K.SLASH):
            op = self.advance()
            cls = ast.Mul if op.kind is K.STAR else ast.Div
            node = cls(node, self.unary(), op.span)
        return node

    def unary(self) -> ast.Node:
        if self.tok.kind is K.MINUS:
            op = self.advance()
            return ast.Neg(self.power(), op.span)
        return self.power()

    def power(self) -> ast.Node:
        base = self.atom()
        if self.tok.kind is K.CARET:
            op = self.advance()
            return ast.Pow(base, self.unary(), op.span)
        return base

    def atom(self) -> ast.Node:
        t = self.tok
        if t.kind is K.INT:
            self.advance()
            return ast.IntLiteral(t.value, t.span)
        if t.kind is K.IDENT:
            if t.text in ast.CALL_NAMES:
                return self.call()
            self.advance()
            return ast.Variable(t.text, t.span)
        if t.kind is K.LPAREN:
            self.advance()
            inner = self.expr()
            self.expect(K.RPAREN)
            return ast.Paren(inner, t.span)
        raise self.error("atom")

    def call(self) -> ast.Node:
        name = self.advance()
        self.expect(K.LPAREN)
        first = self.expr()
        if name.text in ("sum", "prod"):
            self.expect(K.COMMA)
            var = self.identifier()
            self.expect(K.COMMA)
            lower = self.expr()
            self.expect(K.COMMA)
            upper = self.expr()
            self.expect(K.RPAREN)
            cls = ast.Sum if name.text == "sum" else ast.Prod
            return cls(first, var.text, lower, upper, name.span)
        if name.text == "binom":
            self.expect(K.COMMA)
            second = self.expr()
            self.expect(K.RPAREN)
            return ast.Binom(first, second, name.span)
        self.expect(K.RPAREN)
        return ast.Fact(first, name.span)

    def synchronize(self) -> None:
        """Skip past the next ';' (or to EOF) after an error."""
        while self.tok.kind not in (K.SEMI, K.EOF):
            self.advance()
        if self.tok.kind is K.SEMI:
            self.advance()


def _check_scoping(a: Assertion) -> None:
    seen: dict[str, Binding] = {}
    for b in a.bindings:
        if b.name in seen:
            raise ParseError(b.span, (), message=f"variable {b.name!r} bound more than once")
        seen[b.name] = b
    for side in (a.lhs, a.rhs):
        for v in ast.free_variables(side):
            if v.name not in seen:
                raise ParseError(v.span, (), message=f"free variable {v.name!r} has no 'for' binding")


def _parse(tokens: list[Token], recover: bool) -> tuple[list[Assertion], list[ParseError]]:
    p = _Parser(tokens)
    assertions: list[Assertion] = []
    errors: list[ParseError] = []
    while p.tok.kind is not K.EOF:
        try:
            assertions.append(p.assertion())
        except (ParseError, RecursionError) as exc:
            if isinstance(exc, RecursionError):
                exc = ParseError(p.tok.span, (), message="expression nested too deeply")
            if not recover:
                raise exc
            errors.append(exc)
            p.synchronize()
    return assertions, errors


def parse(tokens: list[Token]) -> list[Assertion]:
    """Parse a token list; raises the first :class:`ParseError`."""
    return _parse(tokens, recover=False)[0]


def parse_source(source: str, filename: str = "<input>") -> list[Assertion]:
    """Lex and parse ``source``, collecting every error before raising.

    Raises :class:`DslSyntaxError` listing all lex and parse errors, each
    positioned.  Parsing resumes after the next ';' following an error.
    """
    tokens, lex_errors = scan(source)
    assertions, parse_errors = _parse(tokens, recover=True)
    if lex_errors or parse_errors:
        # a lex error usually causes a parse error at the same spot; keep both
        errors = sorted(lex_errors + parse_errors, key=lambda e: (e.span.line, e.span.column))
        raise DslSyntaxError(errors, source, filename)
    return assertions
