"""Expression grammar for user-defined problem fields.

Grammar (whitespace insensitive):

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' unary)?
    atom  := NUMBER | 't' | 'pi' | IDENT '(' expr ')' | '(' expr ')'

NUMBER is a decimal literal with optional fraction and exponent.  The one
variable is t, the equation's independent variable.  Known functions:
sin, cos, exp, ln, sqrt, abs, erfc, gamma (all unary).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Union

from ._special import erfc, gamma_fn
from .errors import EvaluationError, ExpressionSyntaxError, UnknownIdentifierError

__all__ = [
    "ExprAst", "Num", "Var", "Pi", "Neg", "Bin", "Call",
    "parse_expr", "format_expr", "eval_expr", "expr_to_field", "FUNCTIONS",
]


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    """The variable t."""


@dataclass(frozen=True)
class Pi:
    """The constant pi."""


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class Bin:
    op: str  # one of + - * / ^
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Call:
    name: str
    arg: "ExprAst"


ExprAst = Union[Num, Var, Pi, Neg, Bin, Call]

FUNCTIONS: dict[str, Callable[[float], float]] = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "ln": math.log,
    "sqrt": math.sqrt,
    "abs": abs,
    "erfc": erfc,
    "gamma": gamma_fn,
}

_TOKEN_RE = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)

_ATOM_EXPECTED = frozenset({"number", "t", "pi", "function", "(", "-"})


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ExpressionSyntaxError(
                f"unexpected character {src[pos]!r}", pos, _ATOM_EXPECTED)
        if m.lastgroup == "number":
            tokens.append(("number", m.group(), pos))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group(), pos))
        elif m.lastgroup == "op":
            tokens.append((m.group(), m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ExpressionSyntaxError(
                f"unexpected {tok[0] or 'end of input'}", tok[2], frozenset({kind}))
        return self.advance()

    def parse(self) -> ExprAst:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExpressionSyntaxError(
                f"trailing input {tok[1]!r}", tok[2],
                frozenset({"+", "-", "*", "/", "^", "end"}))
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            node = Bin(op, node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            node = Bin(op, node, self.unary())
        return node

    def unary(self) -> ExprAst:
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> ExprAst:
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            return Bin("^", base, self.unary())
        return base

    def atom(self) -> ExprAst:
        kind, text, offset = self.peek()
        if kind == "number":
            self.advance()
            return Num(float(text))
        if kind == "ident":
            self.advance()
            if text == "t":
                return Var()
            if text == "pi":
                return Pi()
            if self.peek()[0] == "(":
                if text not in FUNCTIONS:
                    raise UnknownIdentifierError(text, offset)
                self.advance()
                arg = self.expr()
                self.expect(")")
                return Call(text, arg)
            raise UnknownIdentifierError(text, offset)
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ExpressionSyntaxError(
            f"unexpected {kind if kind != 'end' else 'end of input'}",
            offset, _ATOM_EXPECTED)


def parse_expr(src: str) -> ExprAst:
    """Parse an expression in the grammar above into its AST."""
    return _Parser(src).parse()


# Precedence levels for the printer; atoms are 5.
_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}


def _prec(node: ExprAst) -> int:
    if isinstance(node, Bin):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return _PREC["neg"]
    return 5


def format_expr(node: ExprAst) -> str:
    """Print an AST so that parse_expr(format_expr(ast)) == ast.

    Parenthesization is minimal but structure preserving: right operands
    of the left-associative operators keep parentheses at equal
    precedence, and '^' keeps its atom-only base.
    """
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "t"
    if isinstance(node, Pi):
        return "pi"
    if isinstance(node, Call):
        return f"{node.name}({format_expr(node.arg)})"
    if isinstance(node, Neg):
        inner = format_expr(node.operand)
        if _prec(node.operand) < _PREC["neg"]:
            inner = f"({inner})"
        return f"-{inner}"
    assert isinstance(node, Bin)
    left, right = format_expr(node.left), format_expr(node.right)
    if node.op == "^":
        # base must be a bare atom; exponent is a unary and may be
        # another power or a negation, but not a binary of lower level
        if _prec(node.left) < 5:
            left = f"({left})"
        if _prec(node.right) < _PREC["neg"]:
            right = f"({right})"
    else:
        if _prec(node.left) < _PREC[node.op]:
            left = f"({left})"
        if _prec(node.right) <= _PREC[node.op]:
            right = f"({right})"
    return f"{left} {node.op} {right}" if node.op in "+-" else f"{left}{node.op}{right}"


def eval_expr(node: ExprAst, t: float) -> float:
    """Evaluate the AST at a value of t, with domain faults reported as
    EvaluationError."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return float(t)
    if isinstance(node, Pi):
        return math.pi
    if isinstance(node, Neg):
        return -eval_expr(node.operand, t)
    if isinstance(node, Call):
        value = eval_expr(node.arg, t)
        if node.name == "ln" and value <= 0.0:
            raise EvaluationError(f"ln of non-positive value {value!r}")
        if node.name == "sqrt" and value < 0.0:
            raise EvaluationError(f"sqrt of negative value {value!r}")
        return float(FUNCTIONS[node.name](value))
    assert isinstance(node, Bin)
    a = eval_expr(node.left, t)
    b = eval_expr(node.right, t)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if node.op == "/":
        if b == 0.0:
            raise EvaluationError("division by zero")
        return a / b
    try:
        result = a**b
    except (OverflowError, ZeroDivisionError, ValueError) as exc:
        raise EvaluationError(f"power fault: {a!r} ^ {b!r}") from exc
    if isinstance(result, complex):
        raise EvaluationError(f"non-real power: {a!r} ^ {b!r}")
    return result


def expr_to_field(src: str) -> Callable[[float], float]:
    """Compile an expression source into a callable field of t."""
    ast = parse_expr(src)
    return lambda t: eval_expr(ast, t)
