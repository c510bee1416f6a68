"""Parser and evaluator for the closed-form curve expression language.

The language covers exactly what curve component formulas need: the
variable ``t``, decimal numbers, the constants ``pi`` and ``sqrt3``, the
elementary functions known to the jet layer, integer powers via ``^``,
and the four arithmetic operators with the usual precedence:

    expression := term (('+' | '-') term)*
    term       := factor (('*' | '/') factor)*
    factor     := base ('^' integer)?
    base       := number | 't' | constant | fn '(' expression ')'
                | '(' expression ')' | '-' base

Both the ASCII hyphen and the Unicode minus sign U+2212 are accepted.
Parse errors report 1-based character positions.  Because evaluation
routes every operation through the dispatching functions in
:mod:`pslab.jets`, one parsed tree evaluates on plain floats, on jets in
t, and on bi-jets in (s, t) alike.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import ParseError
from .jets import FUNCTIONS, Jet1, Jet2, JetDomainError

CONSTANTS = {"pi": math.pi, "sqrt3": math.sqrt(3.0)}


# --------------------------------------------------------------------------
# Syntax tree
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Fn:
    name: str
    arg: "Expr"


Expr = Union[Num, Var, Const, Neg, Bin, Pow, Fn]


# --------------------------------------------------------------------------
# Tokenizer
# --------------------------------------------------------------------------

_MINUS_CHARS = "-−"
_OPS = "+*/^()"


@dataclass(frozen=True)
class _Token:
    kind: str  # "num" | "name" | "op" | "end"
    text: str
    pos: int  # 1-based position of the first character


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        if ch in _MINUS_CHARS:
            tokens.append(_Token("op", "-", pos))
            i += 1
        elif ch in _OPS:
            tokens.append(_Token("op", ch, pos))
            i += 1
        elif ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            if j < n and text[j] in "eE":
                k = j + 1
                if k < n and (text[k] in "+-" or text[k] in _MINUS_CHARS):
                    k += 1
                if k < n and text[k].isdigit():
                    j = k
                    while j < n and text[j].isdigit():
                        j += 1
            tokens.append(_Token("num", text[i:j].replace("−", "-"), pos))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], pos))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(_Token("end", "", n + 1))
    return tokens


# --------------------------------------------------------------------------
# Recursive-descent parser
# --------------------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.cur
        if tok.kind != "op" or tok.text != op:
            found = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ParseError(f"expected {op!r} but found {found}", tok.pos)
        self.advance()

    def expression(self) -> Expr:
        node = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.advance().text
            node = Bin(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.cur.kind == "op" and self.cur.text in "*/":
            op = self.advance().text
            node = Bin(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        node = self.base()
        if self.cur.kind == "op" and self.cur.text == "^":
            self.advance()
            tok = self.cur
            if tok.kind != "num" or not tok.text.isdigit():
                found = repr(tok.text) if tok.kind != "end" else "end of input"
                raise ParseError(f"expected integer exponent but found {found}", tok.pos)
            self.advance()
            node = Pow(node, int(tok.text))
        return node

    def base(self) -> Expr:
        tok = self.cur
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(self.base())
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expression()
            self.expect_op(")")
            return node
        if tok.kind == "num":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "name":
            self.advance()
            if tok.text == "t":
                return Var()
            if tok.text in CONSTANTS:
                return Const(tok.text)
            if tok.text in FUNCTIONS:
                self.expect_op("(")
                arg = self.expression()
                self.expect_op(")")
                return Fn(tok.text, arg)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        found = repr(tok.text) if tok.kind != "end" else "end of input"
        raise ParseError(f"expected a value but found {found}", tok.pos)


def parse_expression(text: str) -> Expr:
    """Parse a closed-form expression in t into a syntax tree."""
    parser = _Parser(_tokenize(text))
    node = parser.expression()
    tok = parser.cur
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
    return node


# --------------------------------------------------------------------------
# Evaluation (floats, jets in t, bi-jets in (s, t))
# --------------------------------------------------------------------------

def eval_expression(node: Expr, t):
    """Evaluate a parsed expression at ``t``.

    ``t`` may be a float, a :class:`Jet1`, or a :class:`Jet2`; the result
    has the same type.  Purely constant expressions are promoted to match.
    """
    result = _eval(node, t)
    if isinstance(t, Jet1) and not isinstance(result, Jet1):
        result = Jet1.constant(float(result), t.order)
    elif isinstance(t, Jet2) and not isinstance(result, Jet2):
        result = Jet2.constant(float(result), t.order)
    return result


def _eval(node: Expr, t):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return t
    if isinstance(node, Const):
        return CONSTANTS[node.name]
    if isinstance(node, Neg):
        return -_eval(node.operand, t)
    if isinstance(node, Fn):
        return FUNCTIONS[node.name](_eval(node.arg, t))
    if isinstance(node, Pow):
        return _eval(node.base, t) ** node.exponent
    if isinstance(node, Bin):
        a = _eval(node.left, t)
        b = _eval(node.right, t)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        try:
            return a / b
        except ZeroDivisionError as exc:
            raise JetDomainError("division by zero while evaluating expression") from exc
    raise TypeError(f"not an expression node: {node!r}")


# --------------------------------------------------------------------------
# Pretty-printer (canonical text that re-parses to the same tree)
# --------------------------------------------------------------------------

_PREC_SUM = 0
_PREC_PRODUCT = 1
_PREC_POWER = 2
_PREC_BASE = 3
_PREC_ATOM = 4


def _prec(node: Expr) -> int:
    if isinstance(node, Bin):
        return _PREC_SUM if node.op in "+-" else _PREC_PRODUCT
    if isinstance(node, Pow):
        return _PREC_POWER
    if isinstance(node, Neg):
        return _PREC_BASE
    return _PREC_ATOM


def pretty(node: Expr, _context: int = _PREC_SUM) -> str:
    """Render a syntax tree as text; ``parse_expression(pretty(e)) == e``."""
    if isinstance(node, Num):
        text = repr(node.value)
    elif isinstance(node, Var):
        text = "t"
    elif isinstance(node, Const):
        text = node.name
    elif isinstance(node, Fn):
        text = f"{node.name}({pretty(node.arg, _PREC_SUM)})"
    elif isinstance(node, Neg):
        text = "-" + pretty(node.operand, _PREC_BASE)
    elif isinstance(node, Pow):
        text = f"{pretty(node.base, _PREC_BASE)}^{node.exponent}"
    elif isinstance(node, Bin):
        mine = _prec(node)
        text = (
            pretty(node.left, mine) + node.op + pretty(node.right, mine + 1)
        )
    else:
        raise TypeError(f"not an expression node: {node!r}")
    if _prec(node) < _context:
        return f"({text})"
    return text
