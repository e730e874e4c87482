"""Tokenizer, parser and printer for the ``cofin`` expression language.

The grammar (EBNF, lowest precedence first)::

    statement  = "assert" expr | "let" NAME "=" expr | "seed" INT
               | "check" NAME [INT] | expr ;
    expr       = QWORD expr | relation ;            (* dense? ext? cofinite? finite? infinite? *)
    relation   = implies [ ("in?" | "<=?" | "meets?") implies ] ;
    implies    = union [ "->?" implies ] ;
    union      = inter { "|" inter } ;
    inter      = diff { "&" diff } ;
    diff       = unary { "-" unary } ;
    unary      = PREFIX unary | atom ;               (* not notnot neg lim born class extent ! *)
    atom       = setlit | "(" expr ")" | NAME | CONST
               | "u(" expr ")" | "P(" expr ")" | "Alm(" expr ")" | "Cont(" expr ")"
               | "U(" expr ")" | "C(" expr ")" | "phi(" expr ";" expr ")"
               | "act(" expr "," expr ")" | "compose(" expr "," expr ")"
               | "sigma" [ finite ] ;
    setlit     = finite | "!" finite | RESIDUE | "per(" [BITS] ";" BITS ")" ;
    finite     = "{" [ INT { "," INT } ] "}" ;
    RESIDUE    = [INT] "k" [ "*" INT ] [ "+" INT ] ".." ;   (* 2k.. 2k+1.. k+3.. k*3+1.. *)
    CONST      = "L" | "E" | "N" | "0" | "frechet" | "discrete" | "indiscrete" ;

``X in? F ->? G`` asks whether ``X`` belongs to the implication ``F -> G``;
the implication itself is never materialized.  Every node carries a
:class:`Span`; :func:`show` prints with the minimum number of parentheses,
and ``show(parse(show(e))) == show(e)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from cofin.upset import UpSet, complement, normalize


class ParseError(ValueError):
    """Syntax error with a 1-based position and what was expected there."""

    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line, self.col, self.expected, self.found = line, col, expected, found
        got = f", found {found!r}" if found else ", found end of input"
        super().__init__(f"line {line}, col {col}: expected {expected}{got}")


@dataclass(frozen=True)
class Span:
    line: int
    col: int
    end: int


# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    span: Span | None = field(default=None, kw_only=True, compare=False, repr=False)


@dataclass(frozen=True)
class SetLit(Node):
    value: UpSet


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Const(Node):
    name: str


@dataclass(frozen=True)
class Call(Node):
    """Constructor application such as ``P(A)``, ``phi(A;B)`` or ``sigma{1,3}``."""

    fn: str
    args: tuple


@dataclass(frozen=True)
class Apply(Node):
    """Prefix operator: ``not``, ``lim``, ``!`` and friends."""

    op: str
    arg: Node


@dataclass(frozen=True)
class Binary(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Query(Node):
    """Yes/no question; ``args`` has one operand (``dense?``) or two (``in?``)."""

    op: str
    args: tuple


@dataclass(frozen=True)
class Assert(Node):
    expr: Node


@dataclass(frozen=True)
class Let(Node):
    name: str
    expr: Node


@dataclass(frozen=True)
class Seed(Node):
    value: int


@dataclass(frozen=True)
class Check(Node):
    suite: str
    arg: int | None = None


QWORDS = ("dense?", "ext?", "cofinite?", "finite?", "infinite?")
RELATIONS = ("in?", "<=?", "meets?")
PREFIXES = ("not", "notnot", "neg", "lim", "born", "class", "extent")
CONSTS = ("L", "E", "N", "frechet", "discrete", "indiscrete")
CALLS = {"u": 1, "P": 1, "Alm": 1, "Cont": 1, "U": 1, "C": 1, "phi": 2, "act": 2, "compose": 2}
KEYWORDS = set(PREFIXES) | set(CONSTS) | set(CALLS) | {
    "assert", "let", "seed", "check", "sigma", "per"}

# binding levels used by both parser and printer
LEVEL = {"query": 0, "rel": 1, "->?": 2, "|": 3, "&": 4, "-": 5, "prefix": 6, "atom": 7}


# -- tokenizer -------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<residue>(?:\d+)?k(?:\*\d+)?(?:\+\d+)?\.\.)
  | (?P<qword>(?:dense|ext|cofinite|finite|infinite|in|meets)\?|<=\?|->\?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>\d+)
  | (?P<punct>[{}(),;|&!=\-])
""", re.VERBOSE)

_RESIDUE_RE = re.compile(r"(\d+)?k(?:\*(\d+))?(?:\+(\d+))?\.\.")


def tokenize(text: str) -> list[Token]:
    out, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(line, col, "a token", text[pos])
        kind = m.lastgroup
        if kind == "nl":
            out.append(Token("nl", "\n", line, col))
            line, line_start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), line, col))
        pos = m.end()
    out.append(Token("eof", "", line, len(text) - line_start + 1))
    return out


def _residue(text: str) -> UpSet:
    lead, star, plus = _RESIDUE_RE.fullmatch(text).groups()
    if lead and star:
        raise ValueError("give the modulus once: 2k.. or k*2..")
    m = int(lead or star or 1)
    return UpSet.residue(m, int(plus or 0))


# -- parser ----------------------------------------------------------------


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected: str):
        t = self.tok
        raise ParseError(t.line, t.col, expected, t.text)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind in ("eof", "nl"):
            self.fail(repr(text))
        return self.advance()

    def span(self, start: Token) -> Span:
        prev = self.tokens[self.i - 1]
        end = prev.col + len(prev.text) if prev.line == start.line else start.col + len(start.text)
        return Span(start.line, start.col, end)

    def at(self, *texts: str) -> bool:
        return self.tok.kind not in ("eof", "nl") and self.tok.text in texts

    # statements

    def program(self) -> list[Node]:
        stmts = []
        while self.tok.kind != "eof":
            if self.tok.kind == "nl":
                self.advance()
                continue
            stmts.append(self.statement())
            if self.tok.kind not in ("nl", "eof"):
                self.fail("end of statement")
        return stmts

    def statement(self) -> Node:
        start = self.tok
        if self.at("assert"):
            self.advance()
            e = self.expr()
            return Assert(e, span=self.span(start))
        if self.at("let"):
            self.advance()
            if self.tok.kind != "name" or self.tok.text in KEYWORDS:
                self.fail("a variable name")
            name = self.advance().text
            self.expect("=")
            e = self.expr()
            return Let(name, e, span=self.span(start))
        if self.at("seed"):
            self.advance()
            if self.tok.kind != "int":
                self.fail("an integer seed")
            return Seed(int(self.advance().text), span=self.span(start))
        if self.at("check"):
            self.advance()
            if self.tok.kind != "name":
                self.fail("a suite name")
            suite = self.advance().text
            arg = int(self.advance().text) if self.tok.kind == "int" else None
            return Check(suite, arg, span=self.span(start))
        return self.expr()

    # expressions

    def expr(self) -> Node:
        start = self.tok
        if self.tok.kind == "qword" and self.tok.text in QWORDS:
            op = self.advance().text
            arg = self.expr()
            return Query(op, (arg,), span=self.span(start))
        left = self.implies()
        if self.tok.kind == "qword" and self.tok.text in RELATIONS:
            op = self.advance().text
            right = self.implies()
            return Query(op, (left, right), span=self.span(start))
        return left

    def implies(self) -> Node:
        start = self.tok
        left = self.binary(LEVEL["|"])
        if self.at("->?"):
            self.advance()
            right = self.implies()
            return Binary("->?", left, right, span=self.span(start))
        return left

    def binary(self, level: int) -> Node:
        if level == LEVEL["prefix"]:
            return self.unary()
        op = {LEVEL["|"]: "|", LEVEL["&"]: "&", LEVEL["-"]: "-"}[level]
        start = self.tok
        left = self.binary(level + 1)
        while self.at(op):
            self.advance()
            right = self.binary(level + 1)
            left = Binary(op, left, right, span=self.span(start))
        return left

    def unary(self) -> Node:
        start = self.tok
        if self.tok.kind == "name" and self.tok.text in PREFIXES:
            op = self.advance().text
            return Apply(op, self.unary(), span=self.span(start))
        if self.at("!"):
            self.advance()
            if self.at("{"):
                return SetLit(complement(self.finite()), span=self.span(start))
            return Apply("!", self.unary(), span=self.span(start))
        return self.atom()

    def finite(self) -> UpSet:
        self.expect("{")
        items = []
        if not self.at("}"):
            while True:
                if self.tok.kind != "int":
                    self.fail("an integer")
                items.append(int(self.advance().text))
                if not self.at(","):
                    break
                self.advance()
        self.expect("}")
        return UpSet.finite(items)

    def bits(self) -> str:
        if self.tok.kind == "int" and set(self.tok.text) <= {"0", "1"}:
            return self.advance().text
        return ""

    def atom(self) -> Node:
        t = self.tok
        if self.at("{"):
            return SetLit(self.finite(), span=self.span(t))
        if t.kind == "residue":
            self.advance()
            try:
                value = _residue(t.text)
            except ValueError:
                raise ParseError(t.line, t.col, "a residue literal such as 2k+1..", t.text)
            return SetLit(value, span=self.span(t))
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "int" and t.text == "0":
            self.advance()
            return Const("0", span=self.span(t))
        if t.kind != "name":
            self.fail("an expression")
        name = t.text
        if name == "per":
            self.advance()
            self.expect("(")
            prefix = self.bits()
            self.expect(";")
            wheel = self.bits()
            if not wheel:
                self.fail("wheel bits")
            self.expect(")")
            return SetLit(normalize(len(prefix), len(wheel), prefix, wheel), span=self.span(t))
        if name == "sigma":
            self.advance()
            if self.at("{"):
                return Call("sigma", (SetLit(self.finite(), span=self.span(t)),), span=self.span(t))
            return Const("sigma", span=self.span(t))
        if name in CONSTS:
            self.advance()
            return Const(name, span=self.span(t))
        if name in CALLS:
            self.advance()
            self.expect("(")
            args = [self.expr()]
            sep = ";" if name == "phi" else ","
            for _ in range(CALLS[name] - 1):
                self.expect(sep)
                args.append(self.expr())
            self.expect(")")
            return Call(name, tuple(args), span=self.span(t))
        if name in KEYWORDS:
            self.fail("an expression")
        self.advance()
        return Var(name, span=self.span(t))


def parse(text: str) -> Node:
    """Parse a single statement or expression."""
    p = Parser(text)
    while p.tok.kind == "nl":
        p.advance()
    if p.tok.kind == "eof":
        p.fail("a statement")
    node = p.statement()
    while p.tok.kind == "nl":
        p.advance()
    if p.tok.kind != "eof":
        p.fail("end of input")
    return node


def parse_program(text: str) -> list[Node]:
    """Parse newline-separated statements; ``#`` starts a comment."""
    return Parser(text).program()


# -- printer ---------------------------------------------------------------


def _level(node: Node) -> int:
    if isinstance(node, Query):
        return LEVEL["query"] if len(node.args) == 1 else LEVEL["rel"]
    if isinstance(node, Binary):
        return LEVEL[node.op]
    if isinstance(node, Apply):
        return LEVEL["prefix"]
    return LEVEL["atom"]


def show(node: Node, min_level: int = 0) -> str:
    """Canonical text of ``node``; parenthesized when it binds looser than ``min_level``."""
    text = _show(node)
    return f"({text})" if _level(node) < min_level else text


def _show(node: Node) -> str:
    if isinstance(node, SetLit):
        return node.value.to_literal()
    if isinstance(node, (Var, Const)):
        return node.name
    if isinstance(node, Call):
        if node.fn == "sigma":
            return "sigma" + node.args[0].value.to_literal()
        sep = ";" if node.fn == "phi" else ", "
        return f"{node.fn}(" + sep.join(show(a) for a in node.args) + ")"
    if isinstance(node, Apply):
        if node.op == "!":
            # "!{..}" would read back as a single cofinite literal
            arg = node.arg
            folded = isinstance(arg, SetLit) and arg.value.is_finite
            return "!" + (f"({_show(arg)})" if folded else show(arg, LEVEL["prefix"]))
        return f"{node.op} {show(node.arg, LEVEL['prefix'])}"
    if isinstance(node, Binary):
        lvl = LEVEL[node.op]
        if node.op == "->?":
            return f"{show(node.left, lvl + 1)} ->? {show(node.right, lvl)}"
        return f"{show(node.left, lvl)} {node.op} {show(node.right, lvl + 1)}"
    if isinstance(node, Query):
        if len(node.args) == 1:
            return f"{node.op} {show(node.args[0])}"
        left, right = node.args
        return f"{show(left, LEVEL['->?'])} {node.op} {show(right, LEVEL['->?'])}"
    if isinstance(node, Assert):
        return f"assert {show(node.expr)}"
    if isinstance(node, Let):
        return f"let {node.name} = {show(node.expr)}"
    if isinstance(node, Seed):
        return f"seed {node.value}"
    if isinstance(node, Check):
        return f"check {node.suite}" + ("" if node.arg is None else f" {node.arg}")
    raise TypeError(f"not a syntax node: {node!r}")
