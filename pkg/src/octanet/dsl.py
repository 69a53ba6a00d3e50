"""Recursive-descent parser and evaluator for per-edge index expressions.

Grammar (standard precedence, left-associative binary operators):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := NUMBER | VAR | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor

``NUMBER`` is a nonnegative integer (a slash between numbers is ordinary
division, which evaluates identically).  The only variables are the endpoint
degrees ``du``/``dv`` and the endpoint neighbour-degree sums ``Su``/``Sv``;
an expression must stick to one of the two pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .indices import IndexSpec
from .radicals import RadicalValue, sqrt_of_rational

__all__ = [
    "ExpressionSyntaxError",
    "UnknownVariable",
    "MixedBasis",
    "AsymmetricExpression",
    "Expr",
    "parse",
    "pretty",
    "evaluate",
    "variables",
    "to_index_spec",
]

DEGREE_VARS = ("du", "dv")
DEGSUM_VARS = ("Su", "Sv")
_ALL_VARS = frozenset(DEGREE_VARS + DEGSUM_VARS)


class ExpressionSyntaxError(ValueError):
    """Malformed expression text; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownVariable(ExpressionSyntaxError):
    """Identifier other than du, dv, Su, Sv, sqrt."""


class MixedBasis(ValueError):
    """Expression mixes degree variables with degree-sum variables, or uses
    variables outside the declared basis."""


class AsymmetricExpression(ValueError):
    """Expression value changed under endpoint swap; names the witness class."""

    def __init__(self, cls: tuple[int, int]):
        super().__init__(f"expression is not symmetric on class {cls}")
        self.witness = cls


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sqrt:
    arg: "Expr"


Expr = Union[Num, Var, Neg, BinOp, Sqrt]


# -- tokenizer ---------------------------------------------------------------

_OPS = "+-*/()"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ExpressionSyntaxError(
                f"expected {kind!r}, found {tok[1]!r}" if tok[0] != "end" else f"unexpected end of input",
                tok[2],
            )
        return self.advance()

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            node = BinOp(op, node, self.parse_factor())
        return node

    def parse_factor(self) -> Expr:
        kind, text, offset = self.peek()
        if kind == "num":
            self.advance()
            return Num(Fraction(int(text)))
        if kind == "name":
            self.advance()
            if text == "sqrt":
                self.expect("(")
                inner = self.parse_expr()
                self.expect(")")
                return Sqrt(inner)
            if text in _ALL_VARS:
                return Var(text)
            raise UnknownVariable(f"unknown variable {text!r}", offset)
        if kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if kind == "-":
            self.advance()
            return Neg(self.parse_factor())
        raise ExpressionSyntaxError(
            "unexpected end of input" if kind == "end" else f"unexpected token {text!r}",
            offset,
        )


def parse(text: str) -> Expr:
    """Parse expression text into a tree."""
    p = _Parser(text)
    node = p.parse_expr()
    kind, text_, offset = p.peek()
    if kind != "end":
        raise ExpressionSyntaxError(f"unexpected token {text_!r}", offset)
    return node


# -- rendering ----------------------------------------------------------------

_LEVEL = {"+": 1, "-": 1, "*": 2, "/": 2}


def pretty(expr: Expr) -> str:
    """Render with the fewest parentheses that reparse to the same tree."""
    return _render(expr, 0)


def _render(expr: Expr, parent_level: int) -> str:
    if isinstance(expr, Num):
        return str(expr.value.numerator)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Sqrt):
        return f"sqrt({_render(expr.arg, 0)})"
    if isinstance(expr, Neg):
        body = f"-{_render(expr.operand, 3)}"
        return f"({body})" if parent_level > 2 else body
    lvl = _LEVEL[expr.op]
    left = _render(expr.left, lvl)
    # right side of - and / needs a tighter context to stay left-associative
    right = _render(expr.right, lvl + (1 if expr.op in "-/" else 0))
    body = f"{left} {expr.op} {right}"
    return f"({body})" if parent_level > lvl else body


# -- evaluation ----------------------------------------------------------------

def variables(expr: Expr) -> frozenset[str]:
    if isinstance(expr, Var):
        return frozenset((expr.name,))
    if isinstance(expr, Neg):
        return variables(expr.operand)
    if isinstance(expr, Sqrt):
        return variables(expr.arg)
    if isinstance(expr, BinOp):
        return variables(expr.left) | variables(expr.right)
    return frozenset()


def _check_basis(expr: Expr, basis: str) -> None:
    used = variables(expr)
    d_used = used & set(DEGREE_VARS)
    s_used = used & set(DEGSUM_VARS)
    if d_used and s_used:
        raise MixedBasis(f"expression mixes degree and degree-sum variables: {sorted(used)}")
    wanted = DEGREE_VARS if basis == "degree" else DEGSUM_VARS
    wrong = used - set(wanted)
    if wrong:
        raise MixedBasis(
            f"variables {sorted(wrong)} are not available under basis {basis!r}"
        )


def evaluate(expr: Expr, cls: tuple[int, int], basis: str) -> RadicalValue:
    """Exact value of the expression on one edge class."""
    _check_basis(expr, basis)
    names = DEGREE_VARS if basis == "degree" else DEGSUM_VARS
    env = {names[0]: RadicalValue(cls[0]), names[1]: RadicalValue(cls[1])}
    return _eval(expr, env)


def _eval(expr: Expr, env: dict[str, RadicalValue]) -> RadicalValue:
    if isinstance(expr, Num):
        return RadicalValue(expr.value)
    if isinstance(expr, Var):
        return env[expr.name]
    if isinstance(expr, Neg):
        return -_eval(expr.operand, env)
    if isinstance(expr, Sqrt):
        val = _eval(expr.arg, env)
        return sqrt_of_rational(val.as_fraction())  # NegativeRadicand on < 0
    val_l = _eval(expr.left, env)
    val_r = _eval(expr.right, env)
    if expr.op == "+":
        return val_l + val_r
    if expr.op == "-":
        return val_l - val_r
    if expr.op == "*":
        return val_l * val_r
    return val_l / val_r  # ZeroDivisionError / NonInvertibleDenominator


def to_index_spec(expr: Expr, basis: str) -> IndexSpec:
    """Wrap an expression as an index, checking symmetry on every class seen."""
    _check_basis(expr, basis)

    def per_edge(a: int, b: int) -> RadicalValue:
        value = evaluate(expr, (a, b), basis)
        swapped = evaluate(expr, (b, a), basis)
        if value != swapped:
            raise AsymmetricExpression((a, b) if a <= b else (b, a))
        return value

    return IndexSpec(name=f"expr({pretty(expr)})", basis=basis, per_edge=per_edge)
