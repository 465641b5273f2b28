"""Expression syntax for field elements and basis linear combinations.

Scalars: integers, ``sqrt(<scalar>)``, ``+ - * /``, parentheses, and implicit
multiplication by juxtaposition (``1/3 sqrt(5)``). When basis names are
supplied, identifiers denote basis vectors and the expression must evaluate
to a linear combination of them (``-1/2 e1 + sqrt(3)/2 e2``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import CoefficientNotInTower, DivisionByZero, ParseError, UnknownBasisName
from .field import FieldElement, FieldTower

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    col: int


def tokenize(text: str, line: int = 1, col0: int = 1) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        col = col0 + m.start(m.lastindex)
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(Token("num", num, col))
        elif ident is not None:
            tokens.append(Token("ident", ident, col))
        elif op in "+-*/()":
            tokens.append(Token("op", op, col))
        else:
            raise ParseError(line, col, f"unexpected character {op!r}")
        pos = m.end()
    tokens.append(Token("end", "", col0 + len(text.rstrip())))
    return tokens


class Vec:
    """A linear combination of basis vectors during parsing."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: tuple[FieldElement, ...]):
        self.coeffs = coeffs

    def __add__(self, other: Vec) -> Vec:
        return Vec(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: FieldElement) -> Vec:
        return Vec(tuple(a * c for a in self.coeffs))


class ExprParser:
    def __init__(
        self,
        text: str,
        tower: FieldTower,
        basis: Sequence[str] | None = None,
        line: int = 1,
        col0: int = 1,
    ):
        self.tower = tower
        self.basis = {name: i for i, name in enumerate(basis or ())}
        self.line = line
        self.tokens = tokenize(text, line, col0)
        self.i = 0

    # -- helpers ------------------------------------------------------------
    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, tok: Token, message: str) -> ParseError:
        return ParseError(self.line, tok.col, message)

    def expect(self, op: str) -> Token:
        tok = self.take()
        if tok.kind != "op" or tok.text != op:
            raise self.error(tok, f"expected {op!r}, found {tok.text or 'end of line'!r}")
        return tok

    def _starts_atom(self, tok: Token) -> bool:
        return tok.kind in ("num", "ident") or (tok.kind == "op" and tok.text == "(")

    # -- value algebra --------------------------------------------------------
    def _add(self, a, b, tok: Token, negate: bool = False):
        if negate:
            b = b.scale(self.tower(-1)) if isinstance(b, Vec) else -b
        if isinstance(a, Vec) and isinstance(b, Vec):
            return a + b
        if isinstance(a, FieldElement) and isinstance(b, FieldElement):
            return a + b
        raise self.error(tok, "cannot add a scalar to a basis combination")

    def _mul(self, a, b, tok: Token):
        if isinstance(a, Vec) and isinstance(b, Vec):
            raise self.error(tok, "product of two basis elements is not a coefficient")
        if isinstance(a, Vec):
            return a.scale(b)
        if isinstance(b, Vec):
            return b.scale(a)
        return a * b

    def _div(self, a, b, tok: Token):
        if isinstance(b, Vec):
            raise self.error(tok, "cannot divide by a basis element")
        if b.is_zero():
            raise DivisionByZero(f"line {self.line}, col {tok.col}: division by zero")
        inv = b.inverse()
        return a.scale(inv) if isinstance(a, Vec) else a * inv

    # -- grammar --------------------------------------------------------------
    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise self.error(tok, f"unexpected {tok.text!r}")
        return value

    def expr(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            value = self.term()
            if tok.text == "-":
                value = value.scale(self.tower(-1)) if isinstance(value, Vec) else -value
        else:
            value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                value = self._add(value, self.term(), tok, negate=tok.text == "-")
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                value = self._mul(value, self.unary(), tok)
            elif tok.kind == "op" and tok.text == "/":
                self.take()
                value = self._div(value, self.unary(), tok)
            elif self._starts_atom(tok):
                value = self._mul(value, self.unary(), tok)
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            value = self.unary()
            return value.scale(self.tower(-1)) if isinstance(value, Vec) else -value
        return self.atom()

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return self.tower(int(tok.text))
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "ident":
            if tok.text in self.basis:
                coeffs = [self.tower.zero] * len(self.basis)
                coeffs[self.basis[tok.text]] = self.tower.one
                return Vec(tuple(coeffs))
            if tok.text == "sqrt":
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                if isinstance(arg, Vec):
                    raise self.error(tok, "sqrt of a basis combination")
                if arg.sign() < 0:
                    raise CoefficientNotInTower(self.line, tok.col, f"sqrt of negative {arg}")
                root = arg.try_sqrt()
                if root is None:
                    raise CoefficientNotInTower(
                        self.line, tok.col, f"sqrt({arg}) is not in {self.tower}"
                    )
                return root
            if self.basis:
                raise UnknownBasisName(self.line, tok.col, f"unknown basis name {tok.text!r}")
            raise self.error(tok, f"unknown identifier {tok.text!r}")
        raise self.error(tok, f"unexpected {tok.text or 'end of line'!r}")


def parse_scalar(text: str, tower: FieldTower, line: int = 1, col0: int = 1) -> FieldElement:
    return ExprParser(text, tower, None, line, col0).parse()


def parse_combination(
    text: str, tower: FieldTower, basis: Sequence[str], line: int = 1, col0: int = 1
) -> tuple[FieldElement, ...]:
    """Parse a basis linear combination; a bare ``0`` is the zero vector."""
    parser = ExprParser(text, tower, basis, line, col0)
    value = parser.parse()
    if isinstance(value, FieldElement):
        if value.is_zero():
            return (tower.zero,) * len(basis)
        raise ParseError(line, col0, "expected a linear combination of basis elements")
    return value.coeffs
