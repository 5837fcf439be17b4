"""Tiny arithmetic-expression parser shared by scalar, polynomial and Hopf-element syntax.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') INT)?
    atom   := INT | NAME | '(' expr ')'

Evaluation is delegated to an adapter so the same grammar produces field
elements, commutative polynomials, or elements of a noncommutative algebra.
"""

from __future__ import annotations

import re
from typing import Any, Protocol

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


class Adapter(Protocol):
    def number(self, n: int) -> Any: ...
    def name(self, s: str) -> Any: ...
    def add(self, a: Any, b: Any) -> Any: ...
    def sub(self, a: Any, b: Any) -> Any: ...
    def mul(self, a: Any, b: Any) -> Any: ...
    def div(self, a: Any, b: Any) -> Any: ...
    def neg(self, a: Any) -> Any: ...
    def pow(self, a: Any, e: int) -> Any: ...


def tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-").replace("·", "*")
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, adapter: Adapter):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.ad = adapter

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input {self.toks[self.i][1]!r} in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            val = self.ad.add(val, rhs) if op == "+" else self.ad.sub(val, rhs)
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            val = self.ad.mul(val, rhs) if op == "*" else self.ad.div(val, rhs)
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return self.ad.neg(self.unary())
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            return self.ad.pow(base, int(val))
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.ad.number(int(val))
        if kind == "name":
            return self.ad.name(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def evaluate(text: str, adapter: Adapter):
    """Parse ``text`` and evaluate it with ``adapter``."""
    return _Parser(text, adapter).parse()
