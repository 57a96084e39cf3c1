"""Scalar fields on R^N evaluable over plain floats, Dual, or HyperDual.

A field is an arity plus an evaluation recipe built from ring operations
only (+, -, *, /, integer powers), so the same recipe runs unchanged over
any of the supported scalar rings. Built-ins cover the determinant of the
row-major-flattened n x n argument and diagonal quadrics; everything else
comes from parsed expression text.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .autodiff import ipow

# Row-major flattening, fixed repo-wide: entry (i, j) of an n x n matrix
# lives at coordinate i * n + j.


class ParseError(ValueError):
    """Expression rejected at parse time; offset is a byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class ScalarField:
    """N-variable function applicable to any sequence of N ring elements."""

    arity: int
    body: Callable[[Sequence], object]
    name: str = ""

    def __call__(self, args: Sequence):
        if len(args) != self.arity:
            raise ValueError(
                f"field '{self.name or '?'}' has arity {self.arity}, got {len(args)} arguments"
            )
        return self.body(args)


def _cofactor_det(a: Sequence, n: int, rows: tuple, cols: tuple):
    # Laplace expansion along the first remaining row; division-free, so the
    # recipe is valid over dual rings with no invertibility requirement.
    if len(rows) == 1:
        return a[rows[0] * n + cols[0]]
    r0 = rows[0]
    rest = rows[1:]
    acc = None
    for j, c in enumerate(cols):
        sub = cols[:j] + cols[j + 1 :]
        term = a[r0 * n + c] * _cofactor_det(a, n, rest, sub)
        if acc is None:
            acc = term
        elif j % 2 == 0:
            acc = acc + term
        else:
            acc = acc - term
    return acc


def determinant_field(n: int) -> ScalarField:
    """Determinant of the row-major-flattened n x n argument, 1 <= n <= 6."""
    if not 1 <= n <= 6:
        raise ValueError(f"determinant_field supports 1 <= n <= 6, got {n}")
    idx = tuple(range(n))
    return ScalarField(
        arity=n * n,
        body=lambda a: _cofactor_det(a, n, idx, idx),
        name=f"det{n}",
    )


def quadric_field(coeffs) -> ScalarField:
    """Diagonal quadric sum(c_k * x_k^2); arity is len(coeffs)."""
    coeffs = [float(c) for c in coeffs]
    if not coeffs:
        raise ValueError("quadric_field needs at least one coefficient")

    def body(args):
        acc = coeffs[0] * (args[0] * args[0])
        for c, x in zip(coeffs[1:], args[1:]):
            acc = acc + c * (x * x)
        return acc

    return ScalarField(arity=len(coeffs), body=body, name="quadric")


def sphere_field(dim: int) -> ScalarField:
    """Sum of squares of all coordinates."""
    return quadric_field([1.0] * dim)


# --- expression trees ------------------------------------------------------
#
# Grammar (whitespace insignificant):
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := '-' factor | atom ('^' digits)?
#   atom   := number | 'x' digits | '(' expr ')'


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Var:
    index: int  # zero-based slot


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int  # non-negative literal


Node = Union[Const, Var, Neg, BinOp, Pow]


@dataclass(frozen=True)
class ExpressionTree:
    root: Node
    arity: int

    def evaluate(self, args: Sequence):
        if len(args) != self.arity:
            raise ValueError(f"expression has arity {self.arity}, got {len(args)} arguments")
        return _eval_node(self.root, args)

    def unparse(self) -> str:
        return _unparse(self.root)

    def as_field(self, name: str = "expr") -> ScalarField:
        return ScalarField(arity=self.arity, body=lambda a: _eval_node(self.root, a), name=name)


def _eval_node(node: Node, args: Sequence):
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return args[node.index]
    if isinstance(node, Neg):
        return -_eval_node(node.operand, args)
    if isinstance(node, Pow):
        return ipow(_eval_node(node.base, args), node.exponent)
    left = _eval_node(node.left, args)
    right = _eval_node(node.right, args)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


def _format_number(v: float) -> str:
    # positional notation keeps the text inside the grammar (no 1e-07 forms)
    return np.format_float_positional(v)


def _unparse(node: Node) -> str:
    if isinstance(node, Const):
        return _format_number(node.value)
    if isinstance(node, Var):
        return f"x{node.index + 1}"
    if isinstance(node, Neg):
        return f"-{_unparse_atomic(node.operand)}"
    if isinstance(node, Pow):
        return f"{_unparse_atomic(node.base)}^{node.exponent}"
    return f"({_unparse(node.left)} {node.op} {_unparse(node.right)})"


def _unparse_atomic(node: Node) -> str:
    text = _unparse(node)
    if isinstance(node, (Const, Var)) or text.startswith("("):
        return text
    return f"({text})"


class _Parser:
    def __init__(self, text: str, arity: int):
        self.text = text
        self.arity = arity
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _take(self) -> str:
        ch = self._peek()
        self.pos += 1
        return ch

    def parse(self) -> ExpressionTree:
        root = self._expr()
        self._skip_ws()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected character {self.text[self.pos]!r}", self.pos)
        return ExpressionTree(root=root, arity=self.arity)

    def _expr(self) -> Node:
        node = self._term()
        while self._peek() in ("+", "-"):
            op = self._take()
            node = BinOp(op=op, left=node, right=self._term())
        return node

    def _term(self) -> Node:
        node = self._factor()
        while self._peek() in ("*", "/"):
            op = self._take()
            node = BinOp(op=op, left=node, right=self._factor())
        return node

    def _factor(self) -> Node:
        if self._peek() == "-":
            self._take()
            return Neg(operand=self._factor())
        node = self._atom()
        if self._peek() == "^":
            self._take()
            node = Pow(base=node, exponent=self._exponent())
        return node

    def _exponent(self) -> int:
        self._skip_ws()
        start = self.pos
        if self._peek() == "-":
            raise ParseError("negative exponents are not allowed", self.pos)
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("exponent must be a non-negative integer literal", start)
        return int(self.text[start : self.pos])

    def _atom(self) -> Node:
        ch = self._peek()
        start = self.pos
        if ch == "(":
            self._take()
            node = self._expr()
            if self._peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self._take()
            return node
        if ch.isdigit() or ch == ".":
            return Const(value=self._number())
        if ch.isalpha():
            return self._variable()
        raise ParseError("expected a number, variable, or '('", start)

    def _number(self) -> float:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
        token = self.text[start : self.pos]
        if token == ".":
            raise ParseError("malformed number literal", start)
        return float(token)

    def _variable(self) -> Var:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        name = self.text[start : self.pos]
        if not (name[0] == "x" and name[1:].isdigit()):
            raise ParseError(f"unknown identifier {name!r}", start)
        index = int(name[1:])
        if not 1 <= index <= self.arity:
            raise ParseError(f"variable x{index} exceeds arity {self.arity}", start)
        return Var(index=index - 1)


def parse_expression(text: str, arity: int) -> ExpressionTree:
    """Parse expression text over variables x1..xN into an ExpressionTree.

    Standard precedence (^ above unary minus above * / above + -), left
    association for - and /; exponents are non-negative integer literals.
    """
    if arity < 0:
        raise ValueError("arity must be non-negative")
    return _Parser(text, arity).parse()


def expression_field(text: str, arity: int, name: str = "expr") -> ScalarField:
    """Parse text and wrap it as a ScalarField."""
    return parse_expression(text, arity).as_field(name=name)


def evaluate(field, args: Sequence):
    """Evaluate a ScalarField or ExpressionTree on a sequence of ring elements."""
    if isinstance(field, ExpressionTree):
        return field.evaluate(args)
    return field(args)
