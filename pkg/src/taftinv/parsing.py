"""Recursive-descent parser for elements written in u, v, z.

Scalars may use w (omega), s (the chosen sqrt of omega), r (the primitive
2n-th root), integers, rationals like 3/2, and parentheses.  Powers of
generators must be positive; scalar symbols accept negative powers.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclo import CycNum, primitive_root

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num, start))
        elif name is not None:
            out.append(("name", name, start))
        elif op in "+-*/^()":
            out.append(("op", op, start))
        else:
            raise ParseError(f"unexpected character {op!r}", start)
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, level: int, symbols: dict, generators: dict, mul):
        self.tokens = _tokenize(text)
        self.i = 0
        self.level = level
        self.symbols = symbols
        self.generators = generators
        self.mul = mul
        self.zero = CycNum.rational(level, 0)

    # elements are dicts mono -> CycNum; the scalar monomial is ()
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        out = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return out

    def expr(self):
        out = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            out = _add(out, rhs if op == "+" else _scale(rhs, -1))
        return out

    def term(self):
        out = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op, pos = self.take()[1:]
            rhs = self.unary()
            if op == "*":
                out = self.mul(out, rhs)
            else:
                c = _as_scalar(rhs)
                if c is None:
                    raise ParseError("can only divide by a scalar", pos)
                if not c:
                    raise ParseError("division by zero", pos)
                out = _scale(out, c.inverse())
        return out

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            inner = self.unary()
            return inner if op == "+" else _scale(inner, -1)
        return self.power()

    def power(self):
        pos = self.peek()[2]
        base = self.atom()
        if not (self.peek()[0] == "op" and self.peek()[1] == "^"):
            return base
        self.take()
        neg = False
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            neg = True
        kind, val, epos = self.take()
        if kind != "num":
            raise ParseError("exponent must be an integer", epos)
        e = int(val)
        c = _as_scalar(base)
        if c is not None:
            if neg:
                if not c:
                    raise ParseError("zero has no inverse", pos)
                c = c.inverse()
            return {(0, 0, 0): c ** e} if e else {(0, 0, 0): self.zero + 1}
        if neg or e == 0:
            raise ParseError("generator powers must be positive", epos)
        out = base
        for _ in range(e - 1):
            out = self.mul(out, base)
        return out

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return {(0, 0, 0): self.zero + Fraction(int(val))}
        if kind == "name":
            if val in self.generators:
                return {self.generators[val]: self.zero + 1}
            if val in self.symbols:
                return {(0, 0, 0): self.symbols[val]}
            raise ParseError(f"unknown symbol {val!r}", pos)
        if val == "(":
            out = self.expr()
            self.expect(")")
            return out
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        out[m] = out[m] + c if m in out else c
    return {m: c for m, c in out.items() if c}


def _scale(a: dict, c) -> dict:
    return {m: v * c for m, v in a.items() if v * c}


def _as_scalar(a: dict):
    if not a:
        return Fraction(0)
    if set(a) == {(0, 0, 0)}:
        return a[(0, 0, 0)]
    return None


def parse_scalar(text: str, level: int) -> CycNum:
    """Parse a cyclotomic number written in r = primitive level-th root."""

    def mul(a, b):
        ca, cb = _as_scalar(a), _as_scalar(b)
        return {(0, 0, 0): ca * cb}

    p = _Parser(text, level, {"r": primitive_root(level)}, {}, mul)
    out = p.parse()
    return CycNum.rational(level, 0) + out.get((0, 0, 0), 0)


def parse_element(text: str, spec):
    from .downup import PBWElement, algebra

    alg = algebra(spec)

    def mul(a, b):
        return alg.mul(PBWElement(a), PBWElement(b)).terms

    symbols = {"w": spec.omega, "s": spec.sqrt_omega, "r": spec.zeta}
    gens = {"u": (1, 0, 0), "z": (0, 1, 0), "v": (0, 0, 1)}
    return PBWElement(_Parser(text, spec.level, symbols, gens, mul).parse())
