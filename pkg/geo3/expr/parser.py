"""Recursive descent parser for the scalar expression DSL.

Grammar (whitespace insensitive)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("-" | "+") unary | juxt
    juxt    := power power*          -- only after a numeric literal
    power   := primary ("^" unary)?
    primary := NUMBER | NAME | FUNC "(" expr ")" | FUNC unary | "(" expr ")"

``^`` is right associative and binds tighter than unary minus, so ``-t^2`` is
``-(t^2)`` and ``2^3^2`` is ``2^9``. A numeric literal followed by a name or an
opening parenthesis multiplies it (``2t``, ``3(u+v)``, ``2 cos t``). A function
name not followed by ``(`` applies to the next unary operand, so ``cos t^2`` is
``cos(t^2)`` and ``sin 2t`` is ``sin(2*t)``.
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum, auto

from geo3.errors import ExprSyntaxError, UndeclaredVariableError

from .nodes import CONSTANTS, FUNCTIONS, Binary, Call, Constant, Expr, Unary, Variable


TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^(),\[\]×]))"
)


class TokenKind(StrEnum):
    NUMBER = auto()
    NAME = auto()
    OP = auto()
    END = auto()


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int


def _byte_offset(source: str, index: int) -> int:
    return len(source[:index].encode("utf-8"))


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens, each tagged with its byte offset.

    Raises:
        ExprSyntaxError: On a character that starts no token.
    """
    tokens = []
    position = 0
    while True:
        while position < len(source) and source[position].isspace():
            position += 1
        if position >= len(source):
            break

        match = TOKEN_PATTERN.match(source, position)
        if match is None or match.end() == position:
            raise ExprSyntaxError(
                f"Unexpected character '{source[position]}'",
                _byte_offset(source, position),
                source,
            )

        kind = TokenKind(match.lastgroup)
        start = match.start(match.lastgroup)
        offset = _byte_offset(source, start)
        tokens.append(Token(kind, match.group(match.lastgroup), offset))
        position = match.end()

    tokens.append(Token(TokenKind.END, "", _byte_offset(source, len(source))))
    return tokens


class Parser:
    """Token cursor plus the expression grammar.

    The cursor is exposed so that :mod:`geo3.expr.models` can parse the tuple
    and domain syntax around component expressions with the same tokens.
    """

    def __init__(self, source: str, variables: Iterable[str] = ()) -> None:
        self.source = source
        self.variables = frozenset(variables)
        self.tokens = tokenize(source)
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.current
        if token.kind != TokenKind.END:
            self.position += 1
        return token

    def at(self, text: str) -> bool:
        token = self.current
        return token.kind in (TokenKind.OP, TokenKind.NAME) and token.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"Expected '{text}'")
        return self.advance()

    def expect_end(self) -> None:
        if self.current.kind != TokenKind.END:
            self.fail(f"Unexpected '{self.current.text}'")

    def fail(self, message: str, token: Token | None = None) -> None:
        token = token or self.current
        found = "end of input" if token.kind == TokenKind.END else f"'{token.text}'"
        raise ExprSyntaxError(f"{message}, found {found}", token.offset, self.source)

    def expression(self) -> Expr:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            left = Binary(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            left = Binary(op, left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.at("-") or self.at("+"):
            op = self.advance().text
            return Unary(op, self.unary())
        return self.juxtaposition()

    def juxtaposition(self) -> Expr:
        leading_number = self.current.kind == TokenKind.NUMBER
        left = self.power()
        if not leading_number:
            return left
        while self.current.kind == TokenKind.NAME or self.at("("):
            left = Binary("*", left, self.power())
        return left

    def power(self) -> Expr:
        base = self.primary()
        if self.at("^"):
            self.advance()
            return Binary("^", base, self.unary())
        return base

    def primary(self) -> Expr:
        token = self.current
        match token.kind:
            case TokenKind.NUMBER:
                self.advance()
                return Constant(float(token.text))
            case TokenKind.NAME:
                self.advance()
                return self.name(token)
            case TokenKind.OP if token.text == "(":
                self.advance()
                inner = self.expression()
                self.expect(")")
                return inner
        self.fail("Expected an operand")

    def name(self, token: Token) -> Expr:
        if token.text in self.variables:
            return Variable(token.text)
        if token.text in CONSTANTS:
            return Constant(CONSTANTS[token.text], token.text)
        if token.text in FUNCTIONS:
            if self.at("("):
                self.advance()
                argument = self.expression()
                self.expect(")")
                return Call(token.text, argument)
            if self.current.kind == TokenKind.END or self.current.text in ")],*/^":
                self.fail(f"Missing argument of '{token.text}'")
            return Call(token.text, self.unary())
        raise UndeclaredVariableError(token.text, token.offset, self.variables)


def parse_scalar(source: str, variables: Iterable[str]) -> Expr:
    """Parse a single scalar expression over the declared ``variables``.

    Examples:
        >>> parse_scalar("u*v - pi", {"u", "v"}).evaluate(u=2, v=3)  # 6 - pi
        2.858407346410207

    Raises:
        ExprSyntaxError: On malformed input, with the byte offset of the error.
        UndeclaredVariableError: On a name that is neither declared, a
            constant nor a function.
    """
    if not source or not source.strip():
        raise ExprSyntaxError("Empty expression", 0, source)
    parser = Parser(source, variables)
    expr = parser.expression()
    parser.expect_end()
    return expr
