from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import LexError, SourceSpan


class TokenKind(enum.Enum):
    INT = "INT"
    IDENT = "IDENT"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","
    EQEQ = "=="
    SEMI = ";"
    DOTDOT = ".."
    LBRACE = "{"
    RBRACE = "}"
    ASSERT = "assert"
    FOR = "for"
    IN = "in"
    EOF = "EOF"


KEYWORDS = {"assert": TokenKind.ASSERT, "for": TokenKind.FOR, "in": TokenKind.IN}

_TWO_CHAR = {"==": TokenKind.EQEQ, "..": TokenKind.DOTDOT}
_ONE_CHAR = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
    ";": TokenKind.SEMI,
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    span: SourceSpan

    @property
    def value(self):
        return int(self.text) if self.kind is TokenKind.INT else self.text

    def describe(self) -> str:
        if self.kind is TokenKind.EOF:
            return "end of input"
        return repr(self.text)


def _is_ident_start(c: str) -> bool:
    return c == "_" or ("a" <= c <= "z") or ("A" <= c <= "Z")


def _is_ident_char(c: str) -> bool:
    return _is_ident_start(c) or "0" <= c <= "9"


def scan(source: str) -> tuple[list[Token], list[LexError]]:
    """Tokenize, skipping bad characters; returns tokens and every error."""
    tokens: list[Token] = []
    errors: list[LexError] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r\f\v":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start = col
        two = source[i : i + 2]
        if two in _TWO_CHAR:
            tokens.append(Token(_TWO_CHAR[two], two, SourceSpan(line, start, 2)))
            i += 2
            col += 2
        elif c in _ONE_CHAR:
            tokens.append(Token(_ONE_CHAR[c], c, SourceSpan(line, start, 1)))
            i += 1
            col += 1
        elif "0" <= c <= "9":
            j = i
            while j < n and "0" <= source[j] <= "9":
                j += 1
            text = source[i:j]
            tokens.append(Token(TokenKind.INT, text, SourceSpan(line, start, j - i)))
            col += j - i
            i = j
        elif _is_ident_start(c):
            j = i
            while j < n and _is_ident_char(source[j]):
                j += 1
            text = source[i:j]
            kind = KEYWORDS.get(text, TokenKind.IDENT)
            tokens.append(Token(kind, text, SourceSpan(line, start, j - i)))
            col += j - i
            i = j
        else:
            errors.append(LexError(SourceSpan(line, start, 1), f"unexpected character {c!r}"))
            i += 1
            col += 1
    tokens.append(Token(TokenKind.EOF, "", SourceSpan(line, col, 1)))
    return tokens, errors


def tokenize(source: str) -> list[Token]:
    """Token list ending in EOF; raises :class:`LexError` at the first bad character."""
    tokens, errors = scan(source)
    if errors:
        raise errors[0]
    return tokens
