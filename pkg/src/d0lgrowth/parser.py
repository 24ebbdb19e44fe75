"""Recursive-descent parser for polynomial expressions in ``x``.

Grammar, loosest binding first::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" INTEGER)?
    atom    := INTEGER | "x" | "(" expr ")"

``/`` only divides by a non-zero constant, which covers rational literals
such as ``1/2`` and forms like ``x/2``. Multiplication must be written out:
``2x`` is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .polynomial import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class PolynomialSyntaxError(ParseError):
    pass


class NonIntegerExponent(ParseError):
    pass


class NegativeExponent(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


_TOKEN = re.compile(r"\s*(?:(?P<number>\d+(?:\.\d*)?)|(?P<op>[-+*/^()])|(?P<var>x)|(?P<bad>\S))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            # only trailing whitespace is left
            break
        kind = m.lastgroup
        if kind == "bad":
            raise PolynomialSyntaxError(f"unexpected character {m.group(kind)!r}", m.start(kind))
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.peek.kind == "op" and self.peek.text == text

    def parse(self) -> Polynomial:
        result = self.expr()
        tok = self.peek
        if tok.kind != "end":
            if tok.kind in ("number", "var") or tok.text == "(":
                raise PolynomialSyntaxError(
                    f"unexpected {tok.text!r}; multiplication needs an explicit '*'", tok.position
                )
            raise PolynomialSyntaxError(f"unexpected {tok.text!r}", tok.position)
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.at("+") or self.at("-"):
            op = self.take().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()
            rhs = self.unary()
            if op.text == "*":
                result = result * rhs
            else:
                if rhs.degree is None:
                    raise PolynomialSyntaxError("division by zero", op.position)
                if rhs.degree > 0:
                    raise PolynomialSyntaxError("can only divide by a constant", op.position)
                result = result.scale(1 / rhs.coefficients[0])
        return result

    def unary(self) -> Polynomial:
        if self.at("-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if not self.at("^"):
            return base
        caret = self.take()
        tok = self.peek
        if tok.kind == "op" and tok.text == "-":
            raise NegativeExponent("exponent must be non-negative", tok.position)
        if tok.kind == "number" and "." not in tok.text:
            self.take()
            return base ** int(tok.text)
        if tok.kind == "end":
            raise PolynomialSyntaxError("missing exponent after '^'", caret.position)
        raise NonIntegerExponent("exponent must be an integer literal", tok.position)

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok.kind == "number":
            if "." in tok.text:
                raise PolynomialSyntaxError(
                    f"decimal literal {tok.text!r}; write fractions as a/b", tok.position
                )
            return Polynomial.constant(int(tok.text))
        if tok.kind == "var":
            return Polynomial.x()
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.text == ")"):
                raise PolynomialSyntaxError("expected ')'", close.position)
            return inner
        if tok.kind == "end":
            raise PolynomialSyntaxError("unexpected end of input", tok.position)
        raise PolynomialSyntaxError(f"unexpected {tok.text!r}", tok.position)


def parse_polynomial(text: str) -> Polynomial:
    return _Parser(text).parse()
