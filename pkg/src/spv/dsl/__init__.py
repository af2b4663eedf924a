"""The ``.idn`` identity language: lexer, parser, evaluator and file checker."""

from .checker import AssertionReport, FileReport, TupleVerdict, bundled_path, bundled_files, check_file, check_source
from .errors import DslError, DslSyntaxError, EvalError, LexError, ParseError, SourceSpan
from .evaluator import evaluate
from .lexer import Token, TokenKind, tokenize
from .parser import Assertion, Binding, parse, parse_source
from .printer import pretty, pretty_assertion, pretty_file

__all__ = [
    "Assertion",
    "AssertionReport",
    "Binding",
    "DslError",
    "DslSyntaxError",
    "EvalError",
    "FileReport",
    "LexError",
    "ParseError",
    "SourceSpan",
    "Token",
    "TokenKind",
    "TupleVerdict",
    "bundled_files",
    "bundled_path",
    "check_file",
    "check_source",
    "evaluate",
    "parse",
    "parse_source",
    "pretty",
    "pretty_assertion",
    "pretty_file",
    "tokenize",
]
