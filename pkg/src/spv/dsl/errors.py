from __future__ import annotations

from dataclasses import dataclass

from ..errors import SpvError


@dataclass(frozen=True)
class SourceSpan:
    """1-based line and column of a token or error, and its length in characters."""

    line: int
    column: int
    length: int = 1

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class DslError(SpvError):
    def __init__(self, span: SourceSpan, message: str):
        super().__init__(f"{span}: {message}")
        self.span = span
        self.message = message

    def render(self, source: str, filename: str = "<input>") -> str:
        """Diagnostic with the offending line and a caret underline."""
        lines = source.splitlines()
        head = f"{filename}:{self.span.line}:{self.span.column}: {type(self).__name__}: {self.message}"
        if not 1 <= self.span.line <= len(lines):
            return head
        text = lines[self.span.line - 1]
        caret = " " * (self.span.column - 1) + "^" * max(1, self.span.length)
        return f"{head}\n  {text}\n  {caret}"


class LexError(DslError):
    pass


class ParseError(DslError):
    """``expected`` names what the parser would have accepted at ``span``."""

    def __init__(self, span: SourceSpan, expected=(), found: str = "", message: str | None = None):
        self.expected = tuple(expected)
        self.found = found
        if message is None:
            message = f"expected {' or '.join(self.expected)}"
            if found:
                message += f", found {found}"
        super().__init__(span, message)


class DslSyntaxError(SpvError):
    """Every lex and parse error found in one source text."""

    def __init__(self, errors, source: str = "", filename: str = "<input>"):
        self.errors = list(errors)
        self.source = source
        self.filename = filename
        super().__init__("; ".join(str(e) for e in self.errors))

    def render(self) -> str:
        return "\n".join(e.render(self.source, self.filename) for e in self.errors)


class EvalError(DslError):
    kind = "EvalError"


class DivisionByZero(EvalError):
    kind = "DivisionByZero"


class NonIntegerExponent(EvalError):
    kind = "NonIntegerExponent"


class NonIntegerBound(EvalError):
    kind = "NonIntegerBound"


class UnboundVariable(EvalError):
    kind = "UnboundVariable"


class InvalidArgument(EvalError):
    """``fact``/``binom`` applied outside the non-negative integers."""

    kind = "InvalidArgument"
