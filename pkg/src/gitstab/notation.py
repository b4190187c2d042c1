"""Text syntax for monomials and supports.

Grammar (whitespace ignored)::

    expr   := term ('+' term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' INT)?
    atom   := 'x' INT | pattern | '(' expr ')' | '1'
    pattern:= 'q' INT (',' INT)* '(' vars ('|' vars)* ')'

A pattern ``q2,3(x0,x1|x2,x3,x4)`` stands for every product of a degree-2
monomial in x0,x1 with a degree-3 monomial in x2,x3,x4. Sums are unions of
supports, products are Minkowski sums of exponent sets.
"""
from __future__ import annotations

import json
import re
from typing import Iterable, Sequence

from .core import Monomial, enumerate_monomials

_TOKEN = re.compile(r"\s*(?:(x)(\d+)|(q)(\d+(?:,\d+)*)\(|(\d+)|(\S))")


class ParseError(ValueError):
    pass


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot tokenize near {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            out.append(("var", m.group(2)))
        elif m.group(3):
            out.append(("pattern", m.group(4)))
        elif m.group(5):
            out.append(("int", m.group(5)))
        else:
            out.append(("op", m.group(6)))
    return out


class _Parser:
    def __init__(self, text: str, n_vars: int):
        self.toks = _tokens(text)
        self.i = 0
        self.n = n_vars

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind: str, value: str | None = None) -> str:
        t = self.peek()
        if t is None or t[0] != kind or (value is not None and t[1] != value):
            raise ParseError(f"expected {value or kind}, found {t[1] if t else 'end of input'}")
        self.i += 1
        return t[1]

    def unit(self, idx: int) -> Monomial:
        if idx >= self.n:
            raise ParseError(f"variable x{idx} out of range for {self.n} variables")
        return tuple(int(k == idx) for k in range(self.n))

    def expr(self) -> set[Monomial]:
        acc = self.term()
        while self.peek() == ("op", "+"):
            self.i += 1
            acc |= self.term()
        return acc

    def term(self) -> set[Monomial]:
        acc = self.factor()
        while True:
            t = self.peek()
            if t == ("op", "*"):
                self.i += 1
            elif t is None or t[0] == "op" and t[1] != "(":
                return acc
            acc = _times(acc, self.factor())

    def factor(self) -> set[Monomial]:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.i += 1
            k = int(self.take("int"))
            out = {tuple([0] * self.n)}
            for _ in range(k):
                out = _times(out, base)
            return out
        return base

    def atom(self) -> set[Monomial]:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        kind, val = t
        self.i += 1
        if kind == "var":
            return {self.unit(int(val))}
        if kind == "int":
            if val != "1":
                raise ParseError("only the constant 1 is allowed")
            return {tuple([0] * self.n)}
        if kind == "pattern":
            degrees = [int(x) for x in val.split(",")]
            groups: list[list[int]] = [[]]
            while True:
                groups[-1].append(int(self.take("var")))
                sep = self.take("op")
                if sep == ",":
                    continue
                if sep == "|":
                    groups.append([])
                    continue
                if sep == ")":
                    break
                raise ParseError(f"unexpected {sep!r} inside pattern")
            if len(groups) != len(degrees):
                raise ParseError(f"pattern q{val} needs {len(degrees)} variable groups")
            out = {tuple([0] * self.n)}
            for d, g in zip(degrees, groups):
                part = set()
                for e in enumerate_monomials(len(g), d) if d > 0 else [tuple([0] * len(g))]:
                    m = [0] * self.n
                    for var, k in zip(g, e):
                        if var >= self.n:
                            raise ParseError(f"variable x{var} out of range")
                        m[var] += k
                    part.add(tuple(m))
                out = _times(out, part)
            return out
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def _times(a: set[Monomial], b: set[Monomial]) -> set[Monomial]:
    return {tuple(x + y for x, y in zip(p, q)) for p in a for q in b}


def parse_support(text: str, n_vars: int) -> frozenset:
    """Parse an expression into its (unhomogenized) monomial support."""
    text = text.strip()
    if text.startswith("["):
        return frozenset(_parse_json(text, n_vars))
    p = _Parser(text, n_vars)
    out = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input at {p.peek()[1]!r}")
    return frozenset(out)


def _parse_json(text: str, n_vars: int) -> list[Monomial]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc
    if data and isinstance(data[0], int):
        data = [data]
    out = []
    for row in data:
        if len(row) != n_vars or any(not isinstance(x, int) or x < 0 for x in row):
            raise ParseError(f"bad exponent vector {row}")
        out.append(tuple(row))
    return out


def parse_homogeneous(text: str, n_vars: int, degree: int) -> frozenset:
    """Parse and insist that every monomial has the given degree."""
    s = parse_support(text, n_vars)
    bad = sorted(m for m in s if sum(m) != degree)
    if bad:
        raise ParseError(f"monomials of wrong degree: {[format_monomial(m) for m in bad]}")
    return s


def format_monomial(m: Sequence[int]) -> str:
    parts = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
    return "*".join(parts) or "1"


def format_support(s: Iterable[Monomial]) -> str:
    return " + ".join(format_monomial(m) for m in sorted(s, reverse=True))


def format_weight(w: Sequence[int]) -> str:
    return "<" + ",".join(str(x) for x in w) + ">"
