"""Recursive-descent parser for algebra expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/' | <juxtaposition>) unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | IDENT | '(' expr ')'

Identifiers are a generator name followed by an index (``x2``, ``tpi1``) or one
of the constants ``z`` (primitive 8th root of unity), ``i``, ``sqrt2``, ``u``,
``v``.  Names are resolved by a namespace callback, so the same parser serves
every algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .linear import Algebra, Element
from .scalar import I, SQRT2, ZETA, ParamPoly, Scalar

__all__ = ["ParseError", "parse", "Namespace", "tokenize"]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} at position {pos}")


@dataclass
class Token:
    kind: str
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+\d*)|(.))")


def tokenize(text: str) -> list[Token]:
    text = text.replace("−", "-").replace("·", "*")
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(Token("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(Token("ident", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            out.append(Token("op", ch, m.start(3)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class Namespace:
    """Resolves identifiers for one algebra; ``extra`` overrides generator names."""

    CONSTANTS = ("z", "i", "sqrt2", "u", "v")

    def __init__(self, alg: Algebra, params=None, extra: dict | None = None):
        self.alg = alg
        self.params = params
        self.extra = extra or {}

    def one(self) -> Element:
        return self.alg.one()

    def resolve(self, ident: str, pos: int):
        if ident in self.extra:
            return self.extra[ident]
        if ident == "z":
            return ZETA
        if ident == "i":
            return I
        if ident == "sqrt2":
            return SQRT2
        if ident in ("u", "v"):
            if self.params is None:
                return ParamPoly.u() if ident == "u" else ParamPoly.v()
            return getattr(self.params, ident)
        m = re.fullmatch(r"([A-Za-z]+?)(\d+)", ident)
        if not m:
            raise ParseError(f"unknown identifier {ident!r}", pos)
        name, idx = m.group(1), int(m.group(2))
        try:
            return self.alg.gen(name, idx)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None


def _is_scalar(x) -> bool:
    return isinstance(x, (Scalar, ParamPoly))


class _Parser:
    def __init__(self, tokens: list[Token], ns: Namespace):
        self.toks = tokens
        self.k = 0
        self.ns = ns

    @property
    def cur(self) -> Token:
        return self.toks[self.k]

    def eat(self, kind: str, text: str | None = None) -> Token:
        t = self.cur
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", t.pos)
        self.k += 1
        return t

    def parse(self):
        if self.cur.kind == "end":
            raise ParseError("empty expression", 0)
        val = self.expr()
        if self.cur.kind != "end":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return val

    def expr(self):
        val = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.eat("op").text
            rhs = self.term()
            val = self._add(val, rhs if op == "+" else -rhs)
        return val

    def _starts_atom(self) -> bool:
        t = self.cur
        return t.kind in ("int", "ident") or (t.kind == "op" and t.text == "(")

    def term(self):
        val = self.unary()
        while True:
            t = self.cur
            if t.kind == "op" and t.text == "*":
                self.eat("op")
                val = self._mul(val, self.unary())
            elif t.kind == "op" and t.text == "/":
                self.eat("op")
                d = self.unary()
                if not _is_scalar(d):
                    raise ParseError("can only divide by a scalar", t.pos)
                if not d:
                    raise ParseError("division by zero", t.pos)
                try:
                    val = val / d
                except ZeroDivisionError as exc:
                    raise ParseError(str(exc), t.pos) from None
            elif self._starts_atom():
                val = self._mul(val, self.power())
            else:
                return val

    def unary(self):
        t = self.cur
        if t.kind == "op" and t.text in "+-":
            self.eat("op")
            v = self.unary()
            return -v if t.text == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.cur.kind == "op" and self.cur.text == "^":
            pos = self.eat("op").pos
            neg = False
            paren = False
            if self.cur.kind == "op" and self.cur.text == "(":
                self.eat("op")
                paren = True
            if self.cur.kind == "op" and self.cur.text == "-":
                self.eat("op")
                neg = True
            e = int(self.eat("int").text)
            if paren:
                self.eat("op", ")")
            if neg:
                e = -e
            try:
                return base ** e
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"cannot raise to power {e}: {exc}", pos) from None
        return base

    def atom(self):
        t = self.cur
        if t.kind == "int":
            self.eat("int")
            return Scalar.from_fraction(Fraction(int(t.text)))
        if t.kind == "ident":
            self.eat("ident")
            return self.ns.resolve(t.text, t.pos)
        if t.kind == "op" and t.text == "(":
            self.eat("op")
            v = self.expr()
            self.eat("op", ")")
            return v
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b


def parse(text: str, ns: Namespace | Algebra, params=None) -> Element:
    """Parse ``text`` into an element of the namespace's algebra."""
    if isinstance(ns, Algebra):
        ns = Namespace(ns, params)
    val = _Parser(tokenize(text), ns).parse()
    if _is_scalar(val):
        return ns.one() * val
    return val
