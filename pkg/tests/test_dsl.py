from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from spv import kernel
from spv.dsl import (
    DslSyntaxError,
    LexError,
    ParseError,
    TokenKind,
    bundled_files,
    bundled_path,
    check_file,
    check_source,
    evaluate,
    parse,
    parse_source,
    pretty_file,
    tokenize,
)
from spv.dsl import nodes as ast
from spv.dsl.errors import DivisionByZero, InvalidArgument, NonIntegerBound, NonIntegerExponent, UnboundVariable
from spv.dsl.parser import _Parser

K = TokenKind

THEOREM = (
    "assert sum((-1)^k * binom(n,k) / (n*k + n - 1), k, 0, n) == "
    "n^n * fact(n) * prod(1/(n*k + n - 1), k, 0, n) for n in 2..50;"
)


def kinds(src):
    return [t.kind for t in tokenize(src)]


def expr(src):
    """Parse a bare expression, skipping the assertion-level scoping check."""
    p = _Parser(tokenize(src))
    node = p.expr()
    assert p.tok.kind is K.EOF
    return node


# tokenize


def test_tokenize_call():
    toks = tokenize("binom(5,2)")
    assert [(t.kind, t.text) for t in toks] == [
        (K.IDENT, "binom"),
        (K.LPAREN, "("),
        (K.INT, "5"),
        (K.COMMA, ","),
        (K.INT, "2"),
        (K.RPAREN, ")"),
        (K.EOF, ""),
    ]


def test_tokenize_range():
    assert kinds("n .. 10") == [K.IDENT, K.DOTDOT, K.INT, K.EOF]
    assert kinds("2..50") == [K.INT, K.DOTDOT, K.INT, K.EOF]


def test_lex_error_position():
    with pytest.raises(LexError) as info:
        tokenize("3 $ 4")
    assert (info.value.span.line, info.value.span.column) == (1, 3)


def test_keywords_comments_and_spans():
    toks = tokenize("# header\nassert x == {1} ; for in")
    assert [t.kind for t in toks] == [
        K.ASSERT, K.IDENT, K.EQEQ, K.LBRACE, K.INT, K.RBRACE, K.SEMI, K.FOR, K.IN, K.EOF,
    ]
    assert toks[0].span.line == 2 and toks[0].span.column == 1 and toks[0].span.length == 6
    assert toks[2].span.column == 10 and toks[2].span.length == 2


@pytest.mark.parametrize("src", ["1 = 2", "a.b", "1.5", "x @ y", "é"])
def test_lex_rejects(src):
    with pytest.raises(LexError):
        tokenize(src)


# parse


def test_parse_theorem_assertion():
    (a,) = parse(tokenize(THEOREM))
    assert len(a.bindings) == 1
    assert a.bindings[0].name == "n"
    assert (a.bindings[0].domain.lo, a.bindings[0].domain.hi) == (2, 50)
    assert isinstance(a.lhs, ast.Sum) and a.lhs.var == "k"
    assert isinstance(a.rhs, ast.Mul)


def test_power_is_right_associative():
    (a,) = parse(tokenize("assert 2^3^2 == 512;"))
    assert a.lhs == ast.Pow(ast.IntLiteral(2), ast.Pow(ast.IntLiteral(3), ast.IntLiteral(2)))
    assert evaluate(a.lhs) == 512


def test_subtraction_is_left_associative():
    assert expr("a - b - c") == ast.Sub(ast.Sub(ast.Variable("a"), ast.Variable("b")), ast.Variable("c"))


def test_precedence():
    assert evaluate(expr("-2^2")) == -4
    assert evaluate(expr("(-2)^2")) == 4
    assert evaluate(expr("1 + 2 * 3 ^ 2")) == 19
    assert evaluate(expr("2^-1")) == F(1, 2)
    assert evaluate(expr("8 / 2 / 2")) == 2
    assert expr("-2^2") == ast.Neg(ast.Pow(ast.IntLiteral(2), ast.IntLiteral(2)))


def test_parse_error_expecting_atom():
    with pytest.raises(ParseError) as info:
        parse(tokenize("assert sum(1, k, 0, n) =="))
    assert "atom" in info.value.expected
    assert info.value.span.column == 26


def test_rational_bindings():
    (a,) = parse(tokenize("assert a == a for a in {-1/2, 1, 7/3}, n in 1..3;"))
    assert a.bindings[0].values() == [F(-1, 2), F(1), F(7, 3)]
    assert a.bindings[1].values() == [1, 2, 3]


@pytest.mark.parametrize(
    "src",
    [
        "assert x == 1;",  # unbound
        "assert n == 1 for n in 1..2, n in 1..3;",  # bound twice
        "assert 1 == 1 for a in {1/0};",
        "assert 1 == 1",
        "assert sum(1, 2, 0, 1) == 1;",
        "assert sum == 1;",
        "assert 1 == 1 for sum in 1..2;",
        "assert fact(1, 2) == 1;",
        "assert --1 == 1;",
        "1 == 1;",
        "assert 1 == 1 for n in -1..2;",
    ],
)
def test_parse_rejects(src):
    with pytest.raises(ParseError):
        parse(tokenize(src))


def test_bound_variable_is_not_free():
    (a,) = parse(tokenize("assert sum(k, k, 0, 3) == 6;"))
    assert evaluate(a.lhs) == 6
    with pytest.raises(ParseError):
        parse(tokenize("assert sum(k, k, 0, k) == 6;"))


def test_parse_source_collects_all_errors():
    src = "assert 1 == ;\nassert 2 $ == 2;\nassert 3 == 3;\nassert ) == 1;\n"
    with pytest.raises(DslSyntaxError) as info:
        parse_source(src, "x.idn")
    errs = info.value.errors
    assert [e.span.line for e in errs] == [1, 2, 4]
    assert isinstance(errs[1], LexError)
    rendered = info.value.render()
    assert "x.idn:1:13" in rendered and "^" in rendered


# evaluate


def test_evaluate_basics():
    assert evaluate(expr("binom(5,2)")) == 10
    assert evaluate(expr("binom(3,5)")) == 0
    assert evaluate(expr("fact(0)")) == 1
    assert evaluate(expr("prod(x, k, 5, 3)"), {"x": 7}) == 1
    assert evaluate(expr("sum(x, k, 5, 3)"), {"x": 7}) == 0


def test_evaluate_theorem_sides_at_two():
    (a,) = parse(tokenize(THEOREM))
    assert evaluate(a.lhs, {"n": 2}) == F(8, 15)
    assert evaluate(a.rhs, {"n": 2}) == F(8, 15)


def test_binding_shadowing():
    e = expr("sum(sum(k, k, 0, 2), k, 0, 1)")
    assert evaluate(e) == 6
    assert evaluate(expr("sum(k, k, 0, 2)"), {"k": 100}) == 3


@pytest.mark.parametrize(
    "src, env, exc",
    [
        ("1 / (n - 1)", {"n": 1}, DivisionByZero),
        ("0^-1", {}, DivisionByZero),
        ("2^(1/2)", {}, NonIntegerExponent),
        ("sum(1, k, 0, 1/2)", {}, NonIntegerBound),
        ("y", {}, UnboundVariable),
        ("fact(-1)", {}, InvalidArgument),
        ("binom(1/2, 1)", {}, InvalidArgument),
    ],
)
def test_evaluate_errors(src, env, exc):
    with pytest.raises(exc) as info:
        evaluate(expr(src), env)
    assert info.value.span.line == 1


def test_division_by_zero_is_positioned():
    (a,) = parse(tokenize("assert 1 / (n - 1) == 0 for n in 1..1;"))
    with pytest.raises(DivisionByZero) as info:
        evaluate(a.lhs, {"n": 1})
    assert info.value.span.column == 10


def test_evaluator_matches_kernel():
    (a,) = parse_source(bundled_path("theorem.idn").read_text())
    for n in range(2, 21):
        assert evaluate(a.lhs, {"n": n}) == kernel.alternating_sum(n, n, n - 1)
        assert evaluate(a.rhs, {"n": n}) == kernel.reciprocal_product(n, n, n - 1)


# check


def test_check_bundled_theorem():
    r = check_file(bundled_path("theorem.idn"))
    verdicts = [v for _, v in r.all_verdicts()]
    assert len(verdicts) == 19 and all(v.verdict == "pass" for v in verdicts)
    assert [v.bindings[0][1] for v in verdicts] == list(range(2, 21))


def test_check_conjecture_printed_fails_everywhere():
    r = check_file(bundled_path("conjecture_printed.idn"))
    verdicts = [v for _, v in r.all_verdicts()]
    assert verdicts and all(v.verdict == "fail" for v in verdicts)
    for v in verdicts:
        env = dict(v.bindings)
        p = kernel.conjecture_probe(int(env["n"]), 2 * env["n"], env["g"])
        assert v.lhs == p.sum_value and v.rhs == p.paper_rhs


def test_check_conjecture_corrected_passes():
    r = check_file(bundled_path("conjecture_corrected.idn"))
    assert all(v.verdict == "pass" for _, v in r.all_verdicts())


@pytest.mark.parametrize(
    "name, variant",
    [("corollary1.idn", "1"), ("corollary2.idn", "2"), ("corollary3_corrected.idn", "3corrected"),
     ("corollary3_printed.idn", "3printed")],
)
def test_corollary_files_match_kernel(name, variant):
    r = check_file(bundled_path(name))
    for _, v in r.all_verdicts():
        env = dict(v.bindings)
        k = kernel.corollary_check(variant, int(env["n"]), env["a"])
        assert (v.lhs, v.rhs) == (k.lhs, k.rhs)
        assert (v.verdict == "pass") == k.equal


def test_check_pole_is_per_tuple():
    src = THEOREM.replace("2..50", "1..3")
    r = check_source(src)
    verdicts = [v for _, v in r.all_verdicts()]
    assert [v.verdict for v in verdicts] == ["error", "pass", "pass"]
    assert verdicts[0].error_kind == "DivisionByZero"


def test_check_order_is_lexicographic():
    r = check_source("assert a + b == b + a for a in {2, 1}, b in 0..1;\nassert 1 == 2;")
    tuples = [v.bindings for _, v in r.all_verdicts()]
    assert tuples[:4] == [(("a", 2), ("b", 0)), (("a", 2), ("b", 1)), (("a", 1), ("b", 0)), (("a", 1), ("b", 1))]
    assert tuples[4] == ()
    assert [a.line for a in r.assertions] == [1, 2]


def test_check_parallel_matches_serial():
    path = bundled_path("corollary1.idn")
    assert check_file(path, jobs=3) == check_file(path)


@pytest.mark.parametrize("name", bundled_files())
def test_round_trip(name):
    first = parse_source(bundled_path(name).read_text(encoding="utf-8"))
    again = parse_source(pretty_file(first))
    assert again == first
    assert pretty_file(again) == pretty_file(first)


source_chars = st.sampled_from(list("0123456789nkab+-*/^(),;={}. \n#$") + ["assert", "for", "in", "sum", "binom", "..", "=="])


@settings(max_examples=500)
@given(st.lists(source_chars, max_size=60).map("".join))
def test_parser_totality(src):
    try:
        parse_source(src)
    except DslSyntaxError as exc:
        assert exc.errors
        for e in exc.errors:
            assert isinstance(e, (LexError, ParseError))
            assert e.span.line >= 1 and e.span.column >= 1


def test_deep_nesting_is_a_parse_error():
    with pytest.raises(DslSyntaxError):
        parse_source("assert " + "(" * 5000 + "1" + ")" * 5000 + " == 1;")
