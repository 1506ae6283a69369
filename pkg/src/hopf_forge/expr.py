"""Expression language for the ``eval`` command.

Grammar (LL(1))::

    expr    := tensor (("+" | "-") tensor)*
    tensor  := product ["(x)" product]
    product := unary ("*" unary)*
    unary   := "-" unary | NUMBER ["/" NUMBER] [primary] | primary
    primary := LITERAL | "void"
             | ("delta" | "eps" | "S") "(" expr ")"
             | "grade" "(" expr "," NUMBER ")"
             | "(" expr ")"

Object literals are handed to the rule's own parser.  Values are exact
rationals, :class:`~hopf_forge.freevec.Element` or arity-2
:class:`~hopf_forge.freevec.TensorElement`; ``*`` on two tensors multiplies
factor by factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import hopfcore
from .errors import HopfForgeError, ParseError
from .freevec import Element, TensorElement, format_element, format_rational, scale, tensor
from .ruledef import Rule

FUNCTIONS = ("delta", "eps", "S", "grade")


class ExpressionTypeError(HopfForgeError, TypeError):
    """Operands of incompatible kinds (scalar, element, tensor)."""


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, LIT, NAME, OP, TENSOR, END
    text: str
    pos: int


@dataclass(frozen=True)
class Literal:
    obj: object


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Scale:
    coeff: Fraction
    operand: Node


@dataclass(frozen=True)
class Neg:
    operand: Node


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*", "(x)"
    left: Node
    right: Node


@dataclass(frozen=True)
class Call:
    func: str
    arg: Node
    n: int | None = None


Node = Union[Literal, Number, Scale, Neg, BinOp, Call]

_CLOSERS = {'w"': '"', "g{": "}", "t(": ")", "f[": "]"}


def _scan_literal(text: str, i: int) -> int:
    """End offset of the object literal starting at ``i``."""
    opener = text[i:i + 2]
    close = _CLOSERS[opener]
    if opener in ('w"', "g{"):
        end = text.find(close, i + 2)
        if end < 0:
            raise ParseError("unterminated literal", text, i)
        return end + 1
    depth = 0
    j = i + 1
    while j < len(text):
        ch = text[j]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth == 0:
                return j + 1
        j += 1
    raise ParseError("unbalanced brackets in literal", text, i)


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif text.startswith("(x)", i):
            toks.append(Token("TENSOR", "(x)", i))
            i += 3
        elif text[i:i + 2] in _CLOSERS:
            end = _scan_literal(text, i)
            toks.append(Token("LIT", text[i:end], i))
            i = end
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("NUM", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word == "void":
                toks.append(Token("LIT", word, i))
            elif word in FUNCTIONS:
                toks.append(Token("NAME", word, i))
            else:
                raise ParseError(f"unknown name {word!r}", text, i)
            i = j
        elif ch in "+-*/(),":
            toks.append(Token("OP", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    toks.append(Token("END", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, rule: Rule):
        self.text = text
        self.rule = rule
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(msg, self.text, tok.pos)

    def take(self, kind: str, text: str | None = None) -> Token:
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            got = tok.text or "end of input"
            raise self.error(f"expected {want!r}, found {got!r}")
        self.i += 1
        return tok

    def at(self, kind: str, text: str | None = None) -> bool:
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    def parse(self) -> Node:
        node = self.expr()
        if not self.at("END"):
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Node:
        node = self.tensor()
        while self.at("OP", "+") or self.at("OP", "-"):
            op = self.take("OP").text
            node = BinOp(op, node, self.tensor())
        return node

    def tensor(self) -> Node:
        node = self.product()
        if self.at("TENSOR"):
            self.take("TENSOR")
            node = BinOp("(x)", node, self.product())
            if self.at("TENSOR"):
                raise self.error("only two tensor factors are supported")
        return node

    def product(self) -> Node:
        node = self.unary()
        while self.at("OP", "*"):
            self.take("OP")
            node = BinOp("*", node, self.unary())
        return node

    def _starts_primary(self) -> bool:
        return self.at("LIT") or self.at("NAME") or self.at("OP", "(")

    def unary(self) -> Node:
        if self.at("OP", "-"):
            self.take("OP")
            return Neg(self.unary())
        if self.at("NUM"):
            num = int(self.take("NUM").text)
            value = Fraction(num)
            if self.at("OP", "/"):
                self.take("OP")
                den_tok = self.take("NUM")
                if int(den_tok.text) == 0:
                    raise self.error("zero denominator", den_tok)
                value = Fraction(num, int(den_tok.text))
            if self._starts_primary():
                return Scale(value, self.primary())
            return Number(value)
        return self.primary()

    def primary(self) -> Node:
        tok = self.tok
        if tok.kind == "LIT":
            self.i += 1
            try:
                return Literal(self.rule.parse(tok.text))
            except ParseError as exc:
                raise ParseError(str(exc).split(": ", 1)[-1], self.text, tok.pos + exc.pos) from None
        if tok.kind == "NAME":
            self.i += 1
            self.take("OP", "(")
            arg = self.expr()
            n = None
            if tok.text == "grade":
                self.take("OP", ",")
                n = int(self.take("NUM").text)
            self.take("OP", ")")
            return Call(tok.text, arg, n)
        if self.at("OP", "("):
            self.take("OP")
            node = self.expr()
            self.take("OP", ")")
            return node
        raise self.error(f"expected an operand, found {tok.text or 'end of input'!r}")


def parse_expression(text: str, rule: Rule) -> Node:
    return _Parser(text, rule).parse()


Value = Union[Fraction, Element, TensorElement]


def _kind(v: Value) -> str:
    if isinstance(v, TensorElement):
        return "tensor"
    if isinstance(v, Element):
        return "element"
    return "scalar"


def evaluate(node: Node, rule: Rule, budget: int = hopfcore.DEFAULT_BUDGET) -> Value:
    def ev(n: Node) -> Value:
        if isinstance(n, Literal):
            return Element.basis(n.obj)
        if isinstance(n, Number):
            return n.value
        if isinstance(n, Scale):
            return _scale(n.coeff, ev(n.operand))
        if isinstance(n, Neg):
            return _scale(Fraction(-1), ev(n.operand))
        if isinstance(n, BinOp):
            return _binop(n.op, ev(n.left), ev(n.right))
        return _call(n, ev(n.arg))

    def _scale(c, v):
        return c * v if _kind(v) == "scalar" else scale(c, v)

    def _binop(op, a, b):
        ka, kb = _kind(a), _kind(b)
        if op in "+-":
            if ka != kb:
                raise ExpressionTypeError(f"cannot {'add' if op == '+' else 'subtract'} {ka} and {kb}")
            return a + b if op == "+" else a - b
        if op == "*":
            if ka == "scalar" or kb == "scalar":
                return _scale(a, b) if ka == "scalar" else _scale(b, a)
            if ka != kb:
                raise ExpressionTypeError(f"cannot multiply {ka} by {kb}")
            return hopfcore.mul(rule, a, b)
        if ka != "element" or kb != "element":
            raise ExpressionTypeError(f"(x) needs two elements, got {ka} and {kb}")
        return tensor(a, b)

    def _call(n: Call, v):
        if _kind(v) != "element":
            raise ExpressionTypeError(f"{n.func} expects an element, got {_kind(v)}")
        if n.func == "delta":
            return hopfcore.coproduct(rule, v)
        if n.func == "eps":
            return hopfcore.counit(rule, v)
        if n.func == "S":
            return hopfcore.antipode(rule, v, "rec", budget)
        return hopfcore.project_grade(rule, v, n.n)

    return ev(node)


def format_value(value: Value, rule: Rule) -> str:
    if _kind(value) == "scalar":
        return format_rational(value)
    return format_element(value, rule.format)


def value_to_json(value: Value, rule: Rule) -> dict:
    kind = _kind(value)
    if kind == "scalar":
        return {"type": "scalar", "value": format_rational(value)}
    if kind == "tensor":
        terms = [{"coeff": format_rational(c), "key": [rule.format(g) for g in k]}
                 for k, c in value.items()]
    else:
        terms = [{"coeff": format_rational(c), "key": rule.format(k)} for k, c in value.items()]
    return {"type": kind, "terms": terms}
