"""Recursive-descent parser for element expressions.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | atom ['^' nat]
    atom    := coeff | var | '(' expr ')'
    var     := 'x' nat
    coeff   := integer | '#' nat | list
    list    := '[' lit (',' lit)* ']'
    lit     := ['-'] integer | '#' nat | list

Products are noncommutative and evaluated left to right.  Integer
coefficients mean ``k * 1``; matrix rings take ``[[a,b],[0,c]]`` literals;
``#k`` is the raw element index (the printed form for table rings).
"""

import re

from .errors import InvalidSpec, ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)(\d+)|(#)(\d+)|([-+*^()\[\],]))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", _byte_offset(text, start))
        start = m.start(0) + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("var", int(m.group(3)), start))
        elif m.group(4):
            out.append(("idx", int(m.group(5)), start))
        else:
            out.append((m.group(6), None, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def _byte_offset(text, i):
    return len(text[:i].encode("utf-8"))


class _Parser:
    def __init__(self, text, spec=None):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.spec = spec

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}, found {self.describe(tok)}")
        self.i += 1
        return tok

    def describe(self, tok):
        return "end of input" if tok[0] == "end" else repr(self.text[tok[2]:].split()[0][:8])

    def fail(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        raise ParseError(msg, _byte_offset(self.text, tok[2]))

    # literals are plain python values; the ring interprets them
    def literal(self):
        kind = self.peek()
        if kind == "-":
            self.take()
            return -self.take("int")[1]
        if kind == "int":
            return self.take()[1]
        if kind == "idx":
            return f"#{self.take()[1]}"
        if kind == "[":
            self.take()
            items = [self.literal()]
            while self.peek() == ",":
                self.take()
                items.append(self.literal())
            self.take("]")
            return items
        self.fail(f"expected a coefficient literal, found {self.describe(self.toks[self.i])}")

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() == "*":
            self.take()
            val = val * self.factor()
        return val

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        val = self.atom()
        if self.peek() == "^":
            self.take()
            val = val ** self.take("int")[1]
        return val

    def atom(self):
        spec = self.spec
        tok = self.toks[self.i]
        kind = tok[0]
        if kind == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        if kind == "var":
            self.take()
            if not 1 <= tok[1] <= spec.n:
                self.fail(f"variable x{tok[1]} out of range 1..{spec.n}", tok)
            return spec.x(tok[1])
        if kind in ("int", "idx", "["):
            lit = self.literal()
            try:
                return spec.const(spec.base.from_literal(lit))
            except InvalidSpec as exc:
                self.fail(str(exc), tok)
        self.fail(f"unexpected {self.describe(tok)}", tok)


def parse_element(spec, text):
    """Parse ``text`` into a ``SkewPoly`` of ``spec``."""
    p = _Parser(text, spec)
    if p.peek() == "end":
        p.fail("empty expression")
    val = p.expr()
    if p.peek() != "end":
        p.fail(f"unexpected {p.describe(p.toks[p.i])}")
    return val


def parse_literal(text):
    """Parse a bare coefficient literal into python ints / lists / ``'#k'`` strings."""
    p = _Parser(text)
    val = p.literal()
    if p.peek() != "end":
        p.fail("trailing input after literal")
    return val
