import pytest
from hypothesis import given, strategies as st

from exprgen import corpus, random_expr
from cofin.syntax import (
    Apply, Assert, Binary, Call, Check, Const, Let, ParseError, Query, Seed,
    SetLit, Var, parse, parse_program, show, tokenize,
)
from cofin.upset import EVENS, ODDS, UpSet


def test_examples():
    assert parse("dense? P(2k..)") == Query("dense?", (Call("P", (SetLit(EVENS),)),))
    assert parse("lim C({1,3})") == Apply("lim", Call("C", (SetLit(UpSet.finite([1, 3])),)))
    assert parse("cofinite? !{0,2}") == Query("cofinite?", (SetLit(UpSet.cofinite([0, 2])),))


@pytest.mark.parametrize("text, value", [
    ("2k..", EVENS), ("2k+1..", ODDS), ("k*2+1..", ODDS), ("k..", UpSet.at_least(0)),
    ("k+3..", UpSet.at_least(3)), ("3k+5..", UpSet.residue(3, 5)), ("{}", UpSet.empty()),
    ("per(;10)", EVENS), ("per(1;10)", UpSet.finite([0]) | ODDS), ("per(1;01)", EVENS),
])
def test_set_literals(text, value):
    assert parse(text) == SetLit(value)


def test_precedence():
    a, b, c = Var("a"), Var("b"), Var("c")
    assert parse("a | b & c") == Binary("|", a, Binary("&", b, c))
    assert parse("a - b - c") == Binary("-", Binary("-", a, b), c)
    assert parse("not a | b") == Binary("|", Apply("not", a), b)
    assert parse("a in? b ->? c") == Query("in?", (a, Binary("->?", b, c)))
    assert parse("dense? a | b") == Query("dense?", (Binary("|", a, b),))
    assert parse("a ->? b ->? c") == Binary("->?", a, Binary("->?", b, c))


def test_statements():
    assert parse("assert finite? {1}") == Assert(Query("finite?", (SetLit(UpSet.finite([1])),)))
    assert parse("let A = 2k..") == Let("A", SetLit(EVENS))
    assert parse("seed 42") == Seed(42)
    assert parse("check clu1 3") == Check("clu1", 3)
    assert parse("check all") == Check("all")
    prog = parse_program("# comment\nlet A = {1}\n\n  assert finite? A  # trailing\n")
    assert [type(s) for s in prog] == [Let, Assert]


def test_spans():
    node = parse("dense? P(2k..)")
    assert (node.span.line, node.span.col) == (1, 1)
    inner = node.args[0]
    assert (inner.span.col, inner.span.end) == (8, 15)
    prog = parse_program("let A = {1}\nassert finite? A")
    assert prog[1].span.line == 2


@pytest.mark.parametrize("text, col, expected", [
    ("P(", 3, "an expression"),
    ("u(2k..", 7, "')'"),
    ("{1,", 4, "an integer"),
    ("let E = 3", 5, "a variable name"),
    ("2k.. $", 6, "a token"),
    ("phi({1},{2})", 8, "';'"),
    ("dense? P(2k..) )", 16, "end of input"),
])
def test_errors(text, col, expected):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.col, info.value.expected) == (1, col, expected)


def test_error_line():
    with pytest.raises(ParseError) as info:
        parse_program("let A = {1}\nassert P(")
    assert (info.value.line, info.value.col) == (2, 10)


def test_tokens():
    kinds = [t.kind for t in tokenize("2k+1.. in? P(x) ->? L")]
    assert kinds == ["residue", "qword", "name", "punct", "name", "punct", "qword", "name", "eof"]


def test_round_trip_corpus():
    for node in corpus(200):
        text = show(node)
        assert show(parse(text)) == text
        assert parse(text) == node


@given(st.integers(0, 2**32))
def test_round_trip_property(seed):
    import random
    node = random_expr(random.Random(seed), 4)
    text = show(node)
    assert show(parse(text)) == text
    assert parse(text) == node


def test_printer_parenthesizes():
    node = Binary("&", Binary("|", Var("a"), Var("b")), Var("c"))
    assert show(node) == "(a | b) & c"
    assert show(Apply("not", Binary("|", Var("a"), Const("L")))) == "not (a | L)"
    assert show(Query("in?", (Var("u"), Query("dense?", (Var("I"),))))) == "u in? (dense? I)"
