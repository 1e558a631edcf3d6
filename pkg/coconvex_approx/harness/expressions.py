#  ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++  #
#  This file is part of coconvex_approx (weighted shape-preserving polynomial approximation)     #
#  Copyright © 2026 The coconvex_approx developers.                                              #
#                                                                                                #
#  This program is free software: you can redistribute it and/or modify it under the terms of    #
#  the GNU General Public License as published by the Free Software Foundation, either version   #
#  3 of the License, or (at your option) any later version.                                      #
#                                                                                                #
#  This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;     #
#  without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.     #
#  See the GNU General Public License for more details.                                          #
#                                                                                                #
#  You should have received a copy of the GNU General Public License along with this program.    #
#  If not, see <http://www.gnu.org/licenses/>.                                                   #
#  ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++  #

"""
Module for compiling function expressions such as ``"x^3*abs(x)"`` or ``"tan(cos(exp(x^4)))"`` into vectorized
callables with exact symbolic derivatives. Expressions are parsed by precedence climbing (a Pratt parser): ``+ -``
bind weakest, then ``* /``, then unary minus, then ``^`` (right associative). The functions sin, cos, tan, exp, ln,
abs and sqrt and the constants pi and e are available.
"""

from __future__ import annotations
from dataclasses import dataclass
import math
import re
import numpy as np
from ..utilities import ExpressionSyntaxError

FUNCTIONS = {
    "sin": np.sin, "cos": np.cos, "tan": np.tan, "exp": np.exp, "ln": np.log, "abs": np.abs, "sqrt": np.sqrt,
    # only produced by differentiating abs
    "sign": np.sign
}
CONSTANTS = {"pi": math.pi, "e": math.e}
_PUBLIC_FUNCTIONS = tuple(name for name in FUNCTIONS if name != "sign")
_OPERAND_START = ("number", "x") + tuple(CONSTANTS) + _PUBLIC_FUNCTIONS + ("(", "-")
_AFTER_OPERAND = ("+", "-", "*", "/", "^", ")", "end of input")


# ------------------------------------------- Syntax tree ----------------------------------------

class Node:

    def evaluate(self, x):
        raise NotImplementedError()

    def derivative(self) -> Node:
        raise NotImplementedError()

    def depends_on_x(self) -> bool:
        raise NotImplementedError()


@dataclass(frozen=True)
class Constant(Node):
    value: float

    def evaluate(self, x):
        return np.full_like(x, self.value, dtype=float)

    def derivative(self):
        return Constant(0.0)

    def depends_on_x(self):
        return False

    def __str__(self):
        return repr(self.value) if self.value >= 0 else "({})".format(repr(self.value))


@dataclass(frozen=True)
class Variable(Node):

    def evaluate(self, x):
        return np.asarray(x, dtype=float)

    def derivative(self):
        return Constant(1.0)

    def depends_on_x(self):
        return True

    def __str__(self):
        return "x"


@dataclass(frozen=True)
class Negate(Node):
    operand: Node

    def evaluate(self, x):
        return -self.operand.evaluate(x)

    def derivative(self):
        return negate(self.operand.derivative())

    def depends_on_x(self):
        return self.operand.depends_on_x()

    def __str__(self):
        return "(-{})".format(self.operand)


@dataclass(frozen=True)
class BinaryOp(Node):
    op: str
    left: Node
    right: Node

    def evaluate(self, x):
        a, b = self.left.evaluate(x), self.right.evaluate(x)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        if self.op == "/":
            return a / b
        return np.power(a, b)

    def derivative(self):
        u, v = self.left, self.right
        du, dv = u.derivative(), v.derivative()
        if self.op == "+":
            return add(du, dv)
        if self.op == "-":
            return subtract(du, dv)
        if self.op == "*":
            return add(multiply(du, v), multiply(u, dv))
        if self.op == "/":
            return divide(subtract(multiply(du, v), multiply(u, dv)), power(v, Constant(2.0)))
        if not v.depends_on_x():
            return multiply(multiply(v, power(u, subtract(v, Constant(1.0)))), du)
        if not u.depends_on_x():
            return multiply(multiply(self, Call("ln", u)), dv)
        return multiply(self, add(multiply(dv, Call("ln", u)), divide(multiply(v, du), u)))

    def depends_on_x(self):
        return self.left.depends_on_x() or self.right.depends_on_x()

    def __str__(self):
        return "({} {} {})".format(self.left, self.op, self.right)


@dataclass(frozen=True)
class Call(Node):
    function: str
    argument: Node

    def evaluate(self, x):
        return FUNCTIONS[self.function](self.argument.evaluate(x))

    def derivative(self):
        a = self.argument
        outer = {
            "sin": lambda: Call("cos", a),
            "cos": lambda: negate(Call("sin", a)),
            "tan": lambda: add(Constant(1.0), power(Call("tan", a), Constant(2.0))),
            "exp": lambda: self,
            "ln": lambda: divide(Constant(1.0), a),
            "abs": lambda: Call("sign", a),
            "sqrt": lambda: divide(Constant(0.5), self),
            "sign": lambda: Constant(0.0),
        }[self.function]()
        return multiply(outer, a.derivative())

    def depends_on_x(self):
        return self.argument.depends_on_x()

    def __str__(self):
        return "{}({})".format(self.function, self.argument)


# constructors that fold the trivial cases, keeping derivative trees small

def _is_constant(node: Node, value: float | None = None) -> bool:
    return isinstance(node, Constant) and (value is None or node.value == value)


def negate(a: Node) -> Node:
    return Constant(-a.value) if _is_constant(a) else Negate(a)


def add(a: Node, b: Node) -> Node:
    if _is_constant(a, 0.0):
        return b
    if _is_constant(b, 0.0):
        return a
    if _is_constant(a) and _is_constant(b):
        return Constant(a.value + b.value)
    return BinaryOp("+", a, b)


def subtract(a: Node, b: Node) -> Node:
    if _is_constant(b, 0.0):
        return a
    if _is_constant(a, 0.0):
        return negate(b)
    if _is_constant(a) and _is_constant(b):
        return Constant(a.value - b.value)
    return BinaryOp("-", a, b)


def multiply(a: Node, b: Node) -> Node:
    if _is_constant(a, 0.0) or _is_constant(b, 0.0):
        return Constant(0.0)
    if _is_constant(a, 1.0):
        return b
    if _is_constant(b, 1.0):
        return a
    if _is_constant(a) and _is_constant(b):
        return Constant(a.value * b.value)
    return BinaryOp("*", a, b)


def divide(a: Node, b: Node) -> Node:
    if _is_constant(a, 0.0):
        return Constant(0.0)
    if _is_constant(b, 1.0):
        return a
    return BinaryOp("/", a, b)


def power(a: Node, b: Node) -> Node:
    if _is_constant(b, 0.0):
        return Constant(1.0)
    if _is_constant(b, 1.0):
        return a
    if _is_constant(a) and _is_constant(b):
        return Constant(a.value ** b.value)
    return BinaryOp("^", a, b)


# --------------------------------------------- Parser -------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


_TOKEN_PATTERN = re.compile(r"\s*(?:(?P<number>\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
                            r"|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


def tokenize(text: str) -> list:
    """
    Splits an expression into number, name and operator tokens, followed by an end token.

    :param text: the expression
    :raises ExpressionSyntaxError: at the first character that starts no token
    """
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position == len(text):
            break
        match = _TOKEN_PATTERN.match(text, position)
        if match is None or match.end() == position:
            raise ExpressionSyntaxError("Unexpected character '{}'".format(text[position]), text, position,
                                        _OPERAND_START + _AFTER_OPERAND[:-1])
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


_BINDING_POWERS = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
_UNARY_MINUS_POWER = 25


class _Parser:

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.token
        self.index += 1
        return token

    def fail(self, message: str, expected):
        raise ExpressionSyntaxError(message, self.text, self.token.position, expected)

    def expect(self, kind: str, text: str):
        if self.token.kind != kind or self.token.text != text:
            found = self.token.text or "end of input"
            self.fail("Found '{}'".format(found), (text,))
        self.advance()

    def expression(self, right_binding_power: int = 0) -> Node:
        left = self.prefix()
        while self.token.kind == "op" and _BINDING_POWERS.get(self.token.text, 0) > right_binding_power:
            op = self.advance().text
            # right associativity of ^: the right operand may contain another ^
            power_limit = _BINDING_POWERS[op] - 1 if op == "^" else _BINDING_POWERS[op]
            left = BinaryOp(op, left, self.expression(power_limit))
        if self.token.kind not in ("op", "end") or (self.token.kind == "op" and self.token.text == "("):
            self.fail("Found '{}' after a complete operand".format(self.token.text), _AFTER_OPERAND)
        return left

    def prefix(self) -> Node:
        token = self.token
        if token.kind == "number":
            self.advance()
            return Constant(float(token.text))
        if token.kind == "op" and token.text == "-":
            self.advance()
            return Negate(self.expression(_UNARY_MINUS_POWER))
        if token.kind == "op" and token.text == "+":
            self.advance()
            return self.expression(_UNARY_MINUS_POWER)
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.expression()
            self.expect("op", ")")
            return inner
        if token.kind == "name":
            self.advance()
            if token.text == "x":
                return Variable()
            if token.text in CONSTANTS:
                return Constant(CONSTANTS[token.text])
            if token.text in _PUBLIC_FUNCTIONS:
                self.expect("op", "(")
                argument = self.expression()
                self.expect("op", ")")
                return Call(token.text, argument)
            self.index -= 1
            self.fail("Unknown name '{}'".format(token.text), _OPERAND_START)
        self.fail("Found '{}' where an operand should start".format(token.text or "end of input"), _OPERAND_START)

    def parse(self) -> Node:
        node = self.expression()
        if self.token.kind != "end":
            self.fail("Unbalanced '{}'".format(self.token.text), _AFTER_OPERAND)
        return node


class Expression:

    """
    A compiled function expression in the variable x. Calling it evaluates it (vectorized) with numpy; derivatives
    are exact, obtained by differentiating the syntax tree.

    :param text: the expression text, or None when wrapping an existing syntax tree
    :param node: the syntax tree (instead of text)
    """

    def __init__(self, text: str | None = None, node: Node | None = None):
        if node is None:
            if text is None:
                raise ValueError("An Expression needs either text or a syntax tree.")
            node = _Parser(text).parse()
        self.node = node
        self.text = text if text is not None else str(node)

    @classmethod
    def parse(cls, text: str) -> Expression:
        return cls(text)

    def __call__(self, x):
        x_array = np.asarray(x, dtype=float)
        with np.errstate(all="ignore"):
            value = self.node.evaluate(x_array)
        value = np.broadcast_to(value, x_array.shape).astype(float)
        return float(value) if value.ndim == 0 else value

    def derivative(self, m: int = 1) -> Expression:
        node = self.node
        for _ in range(m):
            node = node.derivative()
        return Expression(node=node) if m else self

    def __repr__(self):
        return "Expression(\"{}\")".format(self.text)

    def __str__(self):
        return self.text
