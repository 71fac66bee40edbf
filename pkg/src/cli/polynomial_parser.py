"""
Recursive-descent parser for polynomial input.

Grammar (whitespace is ignored, implicit multiplication is rejected):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*       divisors must be nonzero constants
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | IDENTIFIER | '(' expr ')'

Rationals are written a/b. Errors report the byte offset of the offending token.
"""

import re
from typing import List, NamedTuple, Sequence

from src.algebra.errors import InputError, PolynomialSyntaxError
from src.algebra.polynomial import Polynomial

TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.)", re.DOTALL)
IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class Token(NamedTuple):
    kind: str   # "int", "name", "op" or "end"
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = TOKEN_RE.match(text, pos)
        offset = len(text[:pos].encode("utf-8"))
        if m.group(1):
            tokens.append(Token("int", m.group(1), offset))
        elif m.group(2):
            tokens.append(Token("name", m.group(2), offset))
        elif m.group(3) in "+-*/^()":
            tokens.append(Token("op", m.group(3), offset))
        else:
            raise PolynomialSyntaxError(f"unexpected character {m.group(3)!r}", offset, text)
        pos = m.end()
    tokens.append(Token("end", "", len(text.encode("utf-8"))))
    return tokens


class PolynomialParser:
    """Parse text into a Polynomial over a fixed list of variables."""

    def __init__(self, gens: Sequence[str]):
        gens = tuple(gens)
        if not gens:
            raise InputError("at least one variable is required")
        if len(set(gens)) != len(gens):
            raise InputError(f"variable names must be distinct: {list(gens)}")
        for g in gens:
            if not IDENTIFIER_RE.fullmatch(g):
                raise InputError(f"invalid variable name {g!r}")
        self.gens = gens

    def parse(self, text: str) -> Polynomial:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        result = self._expr()
        tok = self._peek()
        if tok.kind != "end":
            if tok.kind in ("int", "name") or tok.text == "(":
                raise self._error("implicit multiplication is not allowed", tok)
            raise self._error(f"unexpected {tok.text!r}", tok)
        return result

    def _peek(self) -> Token:
        return self.tokens[self.pos]

    def _next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _error(self, message: str, tok: Token) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, tok.offset, self.text)

    def _expr(self) -> Polynomial:
        result = self._term()
        while self._peek().text in ("+", "-") and self._peek().kind == "op":
            op = self._next().text
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> Polynomial:
        result = self._unary()
        while self._peek().kind == "op" and self._peek().text in ("*", "/"):
            op_tok = self._next()
            rhs_tok = self._peek()
            rhs = self._unary()
            if op_tok.text == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise self._error("division only by a nonzero constant", rhs_tok)
                result = result.scale(1 / rhs.evaluate_at_zero())
        return result

    def _unary(self) -> Polynomial:
        tok = self._peek()
        if tok.kind == "op" and tok.text in ("+", "-"):
            self._next()
            inner = self._unary()
            return -inner if tok.text == "-" else inner
        return self._power()

    def _power(self) -> Polynomial:
        base = self._atom()
        if self._peek().kind == "op" and self._peek().text == "^":
            self._next()
            tok = self._next()
            if tok.kind != "int":
                raise self._error("exponent must be a nonnegative integer", tok)
            base = base ** int(tok.text)
        return base

    def _atom(self) -> Polynomial:
        tok = self._next()
        if tok.kind == "int":
            return Polynomial.constant(self.gens, int(tok.text))
        if tok.kind == "name":
            if tok.text not in self.gens:
                raise self._error(f"unknown identifier {tok.text!r}", tok)
            return Polynomial.variable(self.gens, tok.text)
        if tok.kind == "op" and tok.text == "(":
            inner = self._expr()
            close = self._next()
            if close.text != ")" or close.kind != "op":
                raise self._error("expected ')'", close)
            return inner
        if tok.kind == "end":
            raise self._error("unexpected end of input", tok)
        raise self._error(f"unexpected {tok.text!r}", tok)


def parse_polynomial(text: str, gens: Sequence[str]) -> Polynomial:
    """
    Parse polynomial text over the given variables.

    Raises:
        PolynomialSyntaxError: syntax error or unknown identifier, with byte offset
    """
    return PolynomialParser(gens).parse(text)
