"""Recursive-descent parser for the .mzc circuit language.

Grammar::

    program   := { statement ";" }
    statement := "bs"
               | "phase" "(" arm "," expr ")"
               | "mzi" "(" expr ")"
               | "chain" "(" integer "," expr "," expr ")"
    arm       := "upper" | "lower"
    expr      := term { ("+" | "-") term }
    term      := unary { ("*" | "/") unary }
    unary     := "-" unary | primary
    primary   := number | "pi" | identifier | "(" expr ")"

``#`` starts a comment running to end of line. Angles are radians. The first
error aborts parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from .nodes import BinOp, Bs, Chain, CircuitAst, Expr, Mzi, Name, Neg, Num, Phase, Pi, Statement

KEYWORDS = frozenset({"bs", "phase", "mzi", "chain", "upper", "lower", "pi"})
STATEMENT_KEYWORDS = ("bs", "phase", "mzi", "chain")


class ParseError(Exception):
    def __init__(self, line: int, column: int, message: str, expected: Optional[frozenset[str]] = None):
        self.line = line
        self.column = column
        self.message = message
        self.expected = expected
        super().__init__(f"{line}:{column}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER, IDENT, KEYWORD, PUNCT, EOF
    text: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind == "EOF":
            return "end of input"
        return repr(self.text)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),;+\-*/])
    """,
    re.VERBOSE,
)


def tokenize(source: str) -> Iterator[Token]:
    """Lazily yield tokens; a bad character raises when it is reached."""
    pos = 0
    line, line_start = 1, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(line, col, f"unexpected character {source[pos]!r}")
        kind = m.lastgroup
        text = m.group()
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind == "number":
            yield Token("NUMBER", text, line, col)
        elif kind == "ident":
            yield Token("KEYWORD" if text in KEYWORDS else "IDENT", text, line, col)
        elif kind == "punct":
            yield Token("PUNCT", text, line, col)
        pos = m.end()
    yield Token("EOF", "", line, pos - line_start + 1)


class _Parser:
    def __init__(self, source: str):
        self._tokens = tokenize(source)
        self.tok = next(self._tokens)

    def advance(self) -> Token:
        tok = self.tok
        if tok.kind != "EOF":
            self.tok = next(self._tokens)
        return tok

    def error(self, message: str, expected=None) -> ParseError:
        exp = frozenset(expected) if expected else None
        return ParseError(self.tok.line, self.tok.column, message, exp)

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    def expect_punct(self, text: str) -> Token:
        if not self.at("PUNCT", text):
            raise self.error(f"expected {text!r}, found {self.tok.describe()}", {text})
        return self.advance()

    def program(self) -> CircuitAst:
        statements = []
        while not self.at("EOF"):
            statements.append(self.statement())
            self.expect_punct(";")
        return CircuitAst(tuple(statements))

    def statement(self) -> Statement:
        tok = self.tok
        if tok.kind != "KEYWORD" or tok.text not in STATEMENT_KEYWORDS:
            what = f"unknown keyword {tok.text!r}" if tok.kind in ("IDENT", "KEYWORD") else tok.describe()
            raise self.error(f"expected statement, found {what}", STATEMENT_KEYWORDS)
        self.advance()
        if tok.text == "bs":
            return Bs()
        self.expect_punct("(")
        if tok.text == "phase":
            if not (self.at("KEYWORD", "upper") or self.at("KEYWORD", "lower")):
                raise self.error(f"expected arm, found {self.tok.describe()}", {"upper", "lower"})
            arm = self.advance().text
            self.expect_punct(",")
            st: Statement = Phase(arm, self.expr())
        elif tok.text == "mzi":
            st = Mzi(self.expr())
        else:
            if not (self.at("NUMBER") and self.tok.text.isdigit()):
                raise self.error(f"expected integer, found {self.tok.describe()}", {"integer"})
            n = int(self.tok.text)
            if n < 1:
                raise self.error("chain length must be >= 1")
            self.advance()
            self.expect_punct(",")
            phi = self.expr()
            self.expect_punct(",")
            st = Chain(n, phi, self.expr())
        self.expect_punct(")")
        return st

    def expr(self) -> Expr:
        node = self.term()
        while self.at("PUNCT", "+") or self.at("PUNCT", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.at("PUNCT", "*") or self.at("PUNCT", "/"):
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.at("PUNCT", "-"):
            self.advance()
            return Neg(self.unary())
        return self.primary()

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "NUMBER":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "KEYWORD" and tok.text == "pi":
            self.advance()
            return Pi()
        if tok.kind == "IDENT":
            self.advance()
            return Name(tok.text, tok.line, tok.column)
        if self.at("PUNCT", "("):
            self.advance()
            node = self.expr()
            self.expect_punct(")")
            return node
        raise self.error(f"expected expression, found {tok.describe()}", {"expression"})


def parse(source: str) -> CircuitAst:
    """Parse a circuit program; raises :class:`ParseError` at the first bad token."""
    return _Parser(source).program()


def parse_expression(source: str) -> Expr:
    """Parse a standalone phase expression such as ``pi/2`` or ``-0.3``."""
    p = _Parser(source)
    node = p.expr()
    if not p.at("EOF"):
        raise p.error(f"unexpected {p.tok.describe()} after expression")
    return node
