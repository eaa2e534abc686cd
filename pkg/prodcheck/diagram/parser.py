"""Recursive-descent parser for the string-diagram DSL.

Precedence from tightest to loosest: ``@`` (tensor), ``*`` (composition,
right operand applied first), ``c .`` (scalar prefix), ``+``/``-``.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from ..exceptions import DslSyntaxError
from ..models.term_model import (
    Braid, BraidInv, Compose, Gen, Id, ObjType, ScalarMul, Signature, Sum, Tensor, Term, Zero,
)
from .typecheck import typecheck

TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*@./()\[\],;])"
)

KEYWORDS = {"id", "zero", "braid", "braidinv"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        if match is None:
            raise DslSyntaxError(line, pos - line_start + 1, "a token", text[pos])
        kind = match.lastgroup
        if kind == "nl":
            line += 1
            line_start = match.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class Parser:
    def __init__(self, text: str, sig: Signature, macros: Optional[Mapping[str, str]] = None,
                 _expanding: tuple[str, ...] = ()):
        self.tokens = tokenize(text)
        self.pos = 0
        self.sig = sig
        self.macros = macros or {}
        self._expanding = _expanding

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def at(self, text: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok.kind == "op" and tok.text == text

    def fail(self, expected: str):
        tok = self.peek()
        found = tok.text if tok.kind != "eof" else "end of input"
        raise DslSyntaxError(tok.line, tok.column, expected, found)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        return self.advance()

    def parse(self) -> Term:
        term = self.parse_sum()
        if self.peek().kind != "eof":
            self.fail("end of input")
        return term

    def parse_sum(self) -> Term:
        left = self.parse_scaled()
        while self.at("+") or self.at("-"):
            negate = self.advance().text == "-"
            right = self.parse_scaled()
            if negate:
                right = ScalarMul(c=Fraction(-1), t=right)
            left = Sum(a=left, b=right)
        return left

    def starts_rational(self) -> bool:
        if self.peek().kind == "num":
            return True
        return self.at("-") and self.peek(1).kind == "num"

    def parse_rational(self) -> Fraction:
        sign = -1 if self.at("-") else 1
        if sign < 0:
            self.advance()
        num = int(self.advance().text)
        den = 1
        if self.at("/"):
            self.advance()
            if self.peek().kind != "num":
                self.fail("denominator")
            tok = self.advance()
            den = int(tok.text)
            if den == 0:
                raise DslSyntaxError(tok.line, tok.column, "nonzero denominator", tok.text)
        return Fraction(sign * num, den)

    def parse_scaled(self) -> Term:
        if self.starts_rational():
            c = self.parse_rational()
            self.expect(".")
            return ScalarMul(c=c, t=self.parse_scaled())
        return self.parse_prod()

    def parse_prod(self) -> Term:
        left = self.parse_tensor()
        while self.at("*"):
            self.advance()
            left = Compose(after=left, before=self.parse_tensor())
        return left

    def parse_tensor(self) -> Term:
        left = self.parse_primary()
        while self.at("@"):
            self.advance()
            left = Tensor(left=left, right=self.parse_primary())
        return left

    def parse_primary(self) -> Term:
        tok = self.peek()
        if self.at("("):
            self.advance()
            inner = self.parse_sum()
            self.expect(")")
            return inner
        if self.starts_rational():
            # after '*' or '@' the prefix scales a single atom
            c = self.parse_rational()
            self.expect(".")
            return ScalarMul(c=c, t=self.parse_primary())
        if tok.kind != "ident":
            self.fail("term")
        self.advance()
        if tok.text in KEYWORDS:
            return self.parse_keyword(tok.text)
        if tok.text not in self.sig.gens and tok.text in self.macros:
            return self.expand_macro(tok)
        return Gen(name=tok.text)

    def parse_keyword(self, word: str) -> Term:
        self.expect("[")
        if word == "id":
            labels = self.parse_labels()
            self.expect("]")
            return Id(o=labels)
        if word == "zero":
            dom = self.parse_labels()
            self.expect(";")
            cod = self.parse_labels()
            self.expect("]")
            return Zero(dom=dom, cod=cod)
        x, y = self.parse_braid_args()
        return Braid(x=x, y=y) if word == "braid" else BraidInv(x=x, y=y)

    def parse_labels(self) -> ObjType:
        labels: list[str] = []
        if self.peek().kind != "ident":
            return ()
        labels.append(self.advance().text)
        while self.at(","):
            self.advance()
            if self.peek().kind != "ident":
                self.fail("object label")
            labels.append(self.advance().text)
        return tuple(labels)

    def parse_braid_args(self) -> tuple[ObjType, ObjType]:
        start = self.peek()
        x = self.parse_labels()
        if self.at(";"):
            self.advance()
            y = self.parse_labels()
            self.expect("]")
            return x, y
        if len(x) != 2:
            raise DslSyntaxError(start.line, start.column, "two labels, or 'left;right' label lists",
                                 ",".join(x))
        self.expect("]")
        return x[:1], x[1:]

    def expand_macro(self, tok: Token) -> Term:
        if tok.text in self._expanding:
            raise DslSyntaxError(tok.line, tok.column, "a non-recursive definition", tok.text)
        sub = Parser(self.macros[tok.text], self.sig, self.macros, self._expanding + (tok.text,))
        return sub.parse()


def parse(text: str, sig: Signature, macros: Optional[Mapping[str, str]] = None) -> Term:
    term = Parser(text, sig, macros).parse()
    typecheck(term, sig)
    return term
