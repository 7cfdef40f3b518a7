"""Parser for matrix entry expressions.

Grammar (whitespace is insignificant)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["+" | "-"] INTEGER)?
    atom   := INTEGER | "t" | "(" expr ")"

Unary minus binds looser than ``^``, so ``-t^2`` is ``-(t^2)``.  Rational
literals such as ``-7/2`` are ordinary divisions.  Expressions are
evaluated directly in the target field.
"""

import re

from .errors import ParseError
from .fields import QT

_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|([-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        if m.group(1) is not None:
            out.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            out.append(("t", None))
        else:
            out.append((m.group(3), None))
    return out


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind=None):
        if self.i >= len(self.tokens):
            raise ParseError(f"unexpected end of expression {self.text!r}")
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ParseError(f"division by zero in {self.text!r}")
                value = value / rhs
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take()
        negative = False
        if self.peek() in ("+", "-"):
            negative = self.take()[0] == "-"
        e = self.take("int")[1]
        if negative:
            if not base:
                raise ParseError(f"zero to a negative power in {self.text!r}")
            e = -e
        return base ** e

    def atom(self):
        kind, value = self.take()
        if kind == "int":
            return self.field.coerce(value)
        if kind == "t":
            if self.field is not QT:
                raise ParseError(f"symbol t is not allowed over {self.field.name}")
            return QT.t
        if kind == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected {kind!r} in {self.text!r}")


def parse(text, field):
    """Evaluate the entry expression ``text`` as an element of ``field``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {text!r}")
    p = _Parser(text, field)
    if not p.tokens:
        raise ParseError("empty expression")
    value = p.expr()
    if p.i != len(p.tokens):
        raise ParseError(f"trailing input in {text!r}")
    return value
