"""Parser and evaluator for degree-weight generating function expressions.

Accepted syntax (ASCII only)::

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | factor
    factor := base ('^' factor)?          # '^' is right-associative
    base   := NUMBER | 't' | IDENT | '(' expr ')'
            | ('exp'|'log') '(' expr ')'
    NUMBER := integer, or integer '/' integer written without spaces

Identifiers other than ``t``, ``exp`` and ``log`` are free parameters and
must be bound to exact rationals before evaluation.  Exponents must
evaluate to rational constants: ``t`` may not appear in an exponent, and a
constant like ``4^(1/2)`` is accepted only when the result is rational.
Unary minus binds looser than ``^`` and is stored as subtraction from
zero, so the node set stays closed under the grammar.  Implicit
multiplication ("2t") is rejected; write ``2*t``.

Note that a rational literal is a single token: ``1/2^a`` parses as
``(1/2)^a``.  Write ``1/(2^a)`` for the other reading.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import (
    ConstantTermNotOne,
    NonConstantExponent,
    ParseError,
    SeriesError,
    UnboundParameter,
    UnknownFunction,
    ZeroConstantTerm,
)
from .rational import Rational, rational_root
from .series import TruncatedSeries, constant, exp as series_exp, identity, log as series_log

__all__ = [
    "GfExpr",
    "RationalLiteral",
    "Variable",
    "Parameter",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Pow",
    "Exp",
    "Log",
    "ParamBinding",
    "parse",
    "evaluate",
    "phi_coefficients",
]

ParamBinding = Mapping[str, Rational]

_RESERVED = ("exp", "log")


# --- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class GfExpr:
    """Base AST node; ``span`` is the (start, end) byte range in the source."""

    span: tuple[int, int] = field(compare=False)


@dataclass(frozen=True)
class RationalLiteral(GfExpr):
    value: Fraction


@dataclass(frozen=True)
class Variable(GfExpr):
    """The series variable ``t``."""


@dataclass(frozen=True)
class Parameter(GfExpr):
    name: str


@dataclass(frozen=True)
class Add(GfExpr):
    left: GfExpr
    right: GfExpr


@dataclass(frozen=True)
class Sub(GfExpr):
    left: GfExpr
    right: GfExpr


@dataclass(frozen=True)
class Mul(GfExpr):
    left: GfExpr
    right: GfExpr


@dataclass(frozen=True)
class Div(GfExpr):
    left: GfExpr
    right: GfExpr


@dataclass(frozen=True)
class Pow(GfExpr):
    base: GfExpr
    exponent: GfExpr


@dataclass(frozen=True)
class Exp(GfExpr):
    arg: GfExpr


@dataclass(frozen=True)
class Log(GfExpr):
    arg: GfExpr


# --- tokenizer ------------------------------------------------------------------

_OPERATORS = "+-*/^()"


@dataclass(frozen=True)
class _Token:
    kind: str  # "number", "ident", one of _OPERATORS, "end"
    text: str
    start: int
    end: int
    value: Fraction | None = None


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if not ch.isascii():
            raise ParseError(f"non-ASCII character {ch!r}", i)
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _OPERATORS:
            tokens.append(_Token(ch, ch, i, i + 1))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            # adjacent '/' digits form a single rational literal
            if i + 1 < n and text[i] == "/" and text[i + 1].isdigit():
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
            raw = text[start:i]
            try:
                value = Fraction(raw)
            except ZeroDivisionError:
                raise ParseError(
                    f"zero denominator in rational literal {raw!r}", start
                ) from None
            tokens.append(_Token("number", raw, start, i, value))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("ident", text[start:i], start, i))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n, n))
    return tokens


# --- parser ------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {self._describe(tok)}", tok.start, frozenset({kind})
            )
        return self.advance()

    @staticmethod
    def _describe(tok: _Token) -> str:
        return "end of input" if tok.kind == "end" else f"token {tok.text!r}"

    def parse(self) -> GfExpr:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(
                f"trailing input starting with {self._describe(tok)}",
                tok.start,
                frozenset({"end of input"}),
            )
        return node

    def expr(self) -> GfExpr:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.term()
            span = (node.span[0], right.span[1])
            node = Add(span, node, right) if op.kind == "+" else Sub(span, node, right)
        return node

    def term(self) -> GfExpr:
        node = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            right = self.unary()
            span = (node.span[0], right.span[1])
            node = Mul(span, node, right) if op.kind == "*" else Div(span, node, right)
        return node

    def unary(self) -> GfExpr:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            operand = self.unary()
            span = (tok.start, operand.span[1])
            return Sub(span, RationalLiteral((tok.start, tok.start), Fraction(0)), operand)
        return self.factor()

    def factor(self) -> GfExpr:
        base = self.base()
        if self.peek().kind == "^":
            self.advance()
            exponent = self.factor()  # right-associative
            return Pow((base.span[0], exponent.span[1]), base, exponent)
        return base

    def base(self) -> GfExpr:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return RationalLiteral((tok.start, tok.end), tok.value)
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            self.advance()
            if tok.text in _RESERVED:
                self.expect("(")
                arg = self.expr()
                closing = self.expect(")")
                span = (tok.start, closing.end)
                return Exp(span, arg) if tok.text == "exp" else Log(span, arg)
            if self.peek().kind == "(":
                raise UnknownFunction(tok.text, tok.start)
            if tok.text == "t":
                return Variable((tok.start, tok.end))
            return Parameter((tok.start, tok.end), tok.text)
        raise ParseError(
            f"unexpected {self._describe(tok)}",
            tok.start,
            frozenset({"number", "identifier", "'('", "'-'"}),
        )


def parse(text: str) -> GfExpr:
    """Parse expression text into an AST; raises :class:`ParseError`."""
    return _Parser(text).parse()


# --- evaluation ----------------------------------------------------------------------

def _const_eval(node: GfExpr, binding: ParamBinding) -> Fraction:
    """Evaluate an exponent subtree to an exact rational."""
    if isinstance(node, RationalLiteral):
        return node.value
    if isinstance(node, Parameter):
        if node.name not in binding:
            raise UnboundParameter(f"parameter {node.name!r} is not bound", node.span)
        return Fraction(binding[node.name])
    if isinstance(node, Variable):
        raise NonConstantExponent("the variable t may not appear in an exponent", node.span)
    if isinstance(node, Add):
        return _const_eval(node.left, binding) + _const_eval(node.right, binding)
    if isinstance(node, Sub):
        return _const_eval(node.left, binding) - _const_eval(node.right, binding)
    if isinstance(node, Mul):
        return _const_eval(node.left, binding) * _const_eval(node.right, binding)
    if isinstance(node, Div):
        divisor = _const_eval(node.right, binding)
        if divisor == 0:
            raise NonConstantExponent("division by zero in an exponent", node.span)
        return _const_eval(node.left, binding) / divisor
    if isinstance(node, Pow):
        base = _const_eval(node.base, binding)
        e = _const_eval(node.exponent, binding)
        if e.denominator == 1:
            k = e.numerator
            if k < 0 and base == 0:
                raise NonConstantExponent("zero raised to a negative power", node.span)
            return base ** k
        root = rational_root(base, e.denominator)
        if root is None:
            raise NonConstantExponent(
                "exponent does not evaluate to a rational", node.span
            )
        return root ** e.numerator
    raise NonConstantExponent(
        "exp/log are not allowed inside an exponent", node.span
    )


def _pow_series(base: TruncatedSeries, e: Fraction, span: tuple[int, int]) -> TruncatedSeries:
    if e.denominator == 1:
        return base.pow_int(e.numerator)
    c = base.coeff(0)
    if c == 1:
        return base.pow_rational(e)
    if c == 0:
        raise ConstantTermNotOne(
            "non-integer power of a series with constant term 0"
        )
    # factor the constant out: f^e = (c^(1/q))^p * (f/c)^e, when the root exists
    root = rational_root(c, e.denominator)
    if root is None:
        raise ConstantTermNotOne(
            f"constant term {c} has no exact rational root of index {e.denominator}"
        )
    return (base / c).pow_rational(e) * root ** e.numerator


def _eval(node: GfExpr, binding: ParamBinding, order: int) -> TruncatedSeries:
    try:
        if isinstance(node, RationalLiteral):
            return constant(node.value, order)
        if isinstance(node, Variable):
            return identity(order)
        if isinstance(node, Parameter):
            if node.name not in binding:
                raise UnboundParameter(
                    f"parameter {node.name!r} is not bound", node.span
                )
            return constant(Fraction(binding[node.name]), order)
        if isinstance(node, Add):
            return _eval(node.left, binding, order) + _eval(node.right, binding, order)
        if isinstance(node, Sub):
            return _eval(node.left, binding, order) - _eval(node.right, binding, order)
        if isinstance(node, Mul):
            return _eval(node.left, binding, order) * _eval(node.right, binding, order)
        if isinstance(node, Div):
            return _eval(node.left, binding, order) / _eval(node.right, binding, order)
        if isinstance(node, Pow):
            e = _const_eval(node.exponent, binding)
            return _pow_series(_eval(node.base, binding, order), e, node.span)
        if isinstance(node, Exp):
            return series_exp(_eval(node.arg, binding, order))
        if isinstance(node, Log):
            return series_log(_eval(node.arg, binding, order))
    except SeriesError as err:
        if err.span is None:
            err.span = node.span
        raise
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(expr: GfExpr, binding: ParamBinding, order: int) -> TruncatedSeries:
    """Evaluate an AST to a series of the given order.

    All parameters must be bound to exact rationals.  Series-arithmetic
    errors propagate with the span of the offending subtree attached.
    """
    if order < 1:
        raise ValueError("evaluation order must be at least 1")
    return _eval(expr, binding, order)


def phi_coefficients(expr: GfExpr, binding: ParamBinding, kmax: int) -> list[Fraction]:
    """The degree-weight coefficients ``(phi_0, ..., phi_kmax)``."""
    return list(evaluate(expr, binding, max(kmax, 1)).coefficients[: kmax + 1])
