"""The stream-expression language: parsing, printing and evaluation.

Grammar (hand-written recursive descent, LL(1) after precedence layering)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := SCALAR | 'X' | '(' expr ')'

Precedence is ``^`` above unary ``-`` above ``*``/``/`` above binary
``+``/``-``; binary operators associate to the left.  A ``/`` directly
between two integer literals with no whitespace lexes as one scalar literal
(``3/4``); everywhere else ``/`` is stream division.  Unary minus on a scalar
literal folds into the literal so printing and reparsing are inverse.
Multiplicative inverse has no dedicated syntax (write ``1/e``); the AST node
exists for programmatic use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple, Union

from .errors import ParseError
from .fields import QQ, Field
from .ratstream import RationalStream


@dataclass(frozen=True)
class Scalar:
    value: object


@dataclass(frozen=True)
class VarX:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("power exponent must be a nonnegative literal")


@dataclass(frozen=True)
class Inv:
    operand: "Expr"


Expr = Union[Scalar, VarX, Neg, Add, Sub, Mul, Div, Pow, Inv]

_Token = Tuple[str, object, int]  # (kind, payload, byte offset)

_PUNCT = {
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "/": "SLASH",
    "^": "CARET",
    "(": "LPAREN",
    ")": "RPAREN",
}


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            numerator = int(text[start:i])
            # 'a/b' with no whitespace is one scalar literal token
            if i + 1 < n and text[i] == "/" and text[i + 1].isdigit():
                i += 1
                den_start = i
                while i < n and text[i].isdigit():
                    i += 1
                tokens.append(("RAT", (numerator, int(text[den_start:i])), start))
            else:
                tokens.append(("INT", numerator, start))
            continue
        if ch == "X":
            tokens.append(("X", None, i))
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((_PUNCT[ch], None, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("END", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], field: Field):
        self.tokens = tokens
        self.pos = 0
        self.field = field

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, message: str, expected):
        kind, _, offset = self.peek()
        raise ParseError(f"{message}, found {kind}", offset, expected)

    def expect(self, kind: str) -> _Token:
        if self.peek()[0] != kind:
            self.fail(f"expected {kind}", {kind})
        return self.advance()

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek()[0] in ("PLUS", "MINUS"):
            op = self.advance()[0]
            right = self.parse_term()
            node = Add(node, right) if op == "PLUS" else Sub(node, right)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while self.peek()[0] in ("STAR", "SLASH"):
            op = self.advance()[0]
            right = self.parse_unary()
            node = Mul(node, right) if op == "STAR" else Div(node, right)
        return node

    def parse_unary(self) -> Expr:
        if self.peek()[0] == "MINUS":
            self.advance()
            operand = self.parse_unary()
            if isinstance(operand, Scalar):
                return Scalar(-operand.value)  # fold literal negation
            return Neg(operand)
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.peek()[0] == "CARET":
            self.advance()
            if self.peek()[0] != "INT":
                self.fail("power exponent must be a nonnegative integer literal", {"INT"})
            exponent = self.advance()[1]
            return Pow(base, exponent)
        return base

    def parse_atom(self) -> Expr:
        kind, payload, _ = self.peek()
        if kind == "INT":
            self.advance()
            return Scalar(self.field.from_int(payload))
        if kind == "RAT":
            self.advance()
            numerator, denominator = payload
            if denominator == 0:
                raise ParseError("scalar literal with zero denominator", self.tokens[self.pos - 1][2])
            value = self.field.from_int(numerator) / self.field.from_int(denominator)
            return Scalar(value)
        if kind == "X":
            self.advance()
            return VarX()
        if kind == "LPAREN":
            self.advance()
            node = self.parse_expr()
            self.expect("RPAREN")
            return node
        self.fail("expected a scalar, 'X' or '('", {"INT", "RAT", "X", "LPAREN"})


def parse(text: str, field: Field = QQ) -> Expr:
    """Parse an expression; scalar literals are built in ``field``."""
    parser = _Parser(_tokenize(text), field)
    node = parser.parse_expr()
    if parser.peek()[0] != "END":
        parser.fail("trailing input", {"END"})
    return node


_ADD_PREC, _MUL_PREC, _NEG_PREC, _POW_PREC, _ATOM_PREC = 1, 2, 3, 4, 5


def _precedence(node: Expr, field: Field) -> int:
    if isinstance(node, (Add, Sub)):
        return _ADD_PREC
    if isinstance(node, (Mul, Div, Inv)):
        return _MUL_PREC
    if isinstance(node, Neg):
        return _NEG_PREC
    if isinstance(node, Pow):
        return _POW_PREC
    if isinstance(node, Scalar) and field.is_negative(node.value):
        return _NEG_PREC  # renders with a leading minus
    return _ATOM_PREC


def to_text(node: Expr, field: Field = QQ) -> str:
    """Render an AST so that parsing the text gives the AST back."""

    def wrap(child: Expr, minimum: int) -> str:
        text = render(child)
        return f"({text})" if _precedence(child, field) < minimum else text

    def render(n: Expr) -> str:
        if isinstance(n, Scalar):
            return field.format(n.value)
        if isinstance(n, VarX):
            return "X"
        if isinstance(n, Neg):
            return "-" + wrap(n.operand, _NEG_PREC)
        if isinstance(n, Add):
            return f"{wrap(n.left, _ADD_PREC)} + {wrap(n.right, _ADD_PREC + 1)}"
        if isinstance(n, Sub):
            return f"{wrap(n.left, _ADD_PREC)} - {wrap(n.right, _ADD_PREC + 1)}"
        if isinstance(n, Mul):
            return f"{wrap(n.left, _MUL_PREC)}*{wrap(n.right, _MUL_PREC + 1)}"
        if isinstance(n, Div):
            left = wrap(n.left, _MUL_PREC)
            right = wrap(n.right, _MUL_PREC + 1)
            # keep digit/digit from lexing as a scalar literal
            joiner = " / " if left[-1].isdigit() and right[0].isdigit() else "/"
            return left + joiner + right
        if isinstance(n, Pow):
            return f"{wrap(n.base, _ATOM_PREC)}^{n.exponent}"
        if isinstance(n, Inv):
            return "1/" + wrap(n.operand, _MUL_PREC + 1)
        raise TypeError(f"not an expression node: {n!r}")

    return render(node)


def evaluate(node: Expr, field: Field = QQ) -> RationalStream:
    """Fold an AST into a rational stream over ``field``."""
    if isinstance(node, Scalar):
        return RationalStream.constant(field, field.coerce(node.value))
    if isinstance(node, VarX):
        return RationalStream.x(field)
    if isinstance(node, Neg):
        return -evaluate(node.operand, field)
    if isinstance(node, Add):
        return evaluate(node.left, field) + evaluate(node.right, field)
    if isinstance(node, Sub):
        return evaluate(node.left, field) - evaluate(node.right, field)
    if isinstance(node, Mul):
        return evaluate(node.left, field) * evaluate(node.right, field)
    if isinstance(node, Div):
        return evaluate(node.left, field) / evaluate(node.right, field)
    if isinstance(node, Pow):
        return evaluate(node.base, field) ** node.exponent
    if isinstance(node, Inv):
        return evaluate(node.operand, field).inverse()
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(text: str, field: Field = QQ) -> RationalStream:
    return evaluate(parse(text, field), field)
