"""Text grammar for ring elements and differentials.

    element := ['+'|'-'] term (('+'|'-') term)*
    term    := rational ('*' mono)* | mono ('*' mono)*
    mono    := 't' ['^' int] | 'u' ['^' int]
    diff    := ['+'|'-'] part (('+'|'-') part)*
    part    := [element] ('dt' | 'du' | 'd' '(' element ')')

Example: ``"3/2*t^-2*u + t^4 - u^2"`` and ``"t^-1 dt + 3/2*t^2*u d(t^-1*u)"``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParameter, ExprSyntaxError, GradeOverflow
from .ring import (CurveSpec, Differential, RingElement, derive, make_curve,
                   mul_form, ring_mul, u_power)

_TOKEN = re.compile(r"\s*(?:(\d+)|(dt|du|d|t|u)(?![A-Za-z])|([-+*/^()]))")


@dataclass
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while True:
        while pos < len(src) and src[pos].isspace():
            if src[pos] == "\n":
                line += 1
                line_start = pos + 1
            pos += 1
        if pos >= len(src):
            toks.append(Token("end", "", line, pos - line_start + 1))
            return toks
        mt = _TOKEN.match(src, pos)
        col = pos - line_start + 1
        if not mt or mt.start(mt.lastindex) != pos:
            raise ExprSyntaxError(line, col, "a number, t, u, dt, du, d( or an operator", src)
        kind = {1: "int", 2: "name", 3: "op"}[mt.lastindex]
        toks.append(Token(kind, mt.group(mt.lastindex), line, col))
        pos = mt.end()


class _Parser:
    def __init__(self, src: str, curve: CurveSpec | None, allow_u: bool = True):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0
        self.curve = curve
        self.allow_u = allow_u

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ExprSyntaxError(tok.line, tok.col, expected, self.src)

    def accept(self, text: str) -> Token | None:
        if self.tok.text == text and self.tok.kind != "end":
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, text: str) -> Token:
        t = self.accept(text)
        if t is None:
            self.fail(repr(text))
        return t

    def sign(self) -> int:
        """Consume '+' or '-' and return +1/-1."""
        if self.accept("-"):
            return -1
        self.expect("+")
        return 1

    def expect_end(self):
        if self.tok.kind != "end":
            self.fail("end of input")

    def integer(self, signed: bool) -> int:
        neg = signed and self.accept("-") is not None
        if self.tok.kind != "int":
            self.fail("an integer" if signed else "a positive integer")
        v = int(self.tok.text)
        self.i += 1
        return -v if neg else v

    def starts_term(self) -> bool:
        return self.tok.kind == "int" or self.tok.text in ("t", "u")

    def mono(self) -> tuple[int, int]:
        name = self.tok.text
        start = self.tok
        self.i += 1
        e = self.integer(signed=True) if self.accept("^") else 1
        if name == "t":
            return e, 0
        if not self.allow_u:
            raise GradeOverflow(f"u is not allowed here (col {start.col})")
        if e < 0:
            raise GradeOverflow(f"negative power of u at col {start.col}")
        return 0, e

    def term(self) -> RingElement:
        coef = Fraction(1)
        i_exp, u_exp = 0, 0
        if self.tok.kind == "int":
            num = self.integer(signed=False)
            if self.accept("/"):
                den_tok = self.tok
                den = self.integer(signed=False)
                if den == 0:
                    self.fail("a positive integer", den_tok)
                coef = Fraction(num, den)
            else:
                coef = Fraction(num)
            if not self.accept("*"):
                return RingElement.constant(coef)
        elif self.tok.text not in ("t", "u"):
            self.fail("a rational, t or u")
        while True:
            if self.tok.text not in ("t", "u"):
                self.fail("t or u")
            di, du = self.mono()
            i_exp += di
            u_exp += du
            if not self.accept("*"):
                break
        return self.build(coef, i_exp, u_exp)

    def build(self, coef: Fraction, i: int, a: int) -> RingElement:
        if self.curve is None or a < self.curve.m:
            return RingElement.monomial(i, a, coef)
        return ring_mul(RingElement.monomial(i, 0, coef), u_power(a, self.curve), self.curve)

    def element(self, allow_sign: bool = True) -> RingElement:
        sign = self.sign() if allow_sign and self.tok.text in ("+", "-") else 1
        out = self.term().scale(sign)
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            s = self.sign()
            out = out + self.term().scale(s)
        return out

    def part(self) -> Differential:
        f = self.element(allow_sign=False) if self.starts_term() else RingElement.constant(1)
        if self.accept("dt"):
            return Differential.dt(f)
        if self.accept("du"):
            return Differential.du(f)
        if self.accept("d"):
            self.expect("(")
            g = self.element()
            self.expect(")")
            if self.curve is None:
                raise ValueError("a curve is required to expand f d(g)")
            return mul_form(f, derive(g), self.curve)
        self.fail("dt, du or d(")

    def differential(self) -> Differential:
        sign = self.sign() if self.tok.text in ("+", "-") else 1
        out = self.part().scale(sign)
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            s = self.sign()
            out = out + self.part().scale(s)
        return out


def _check_grades(f: RingElement, curve: CurveSpec | None) -> RingElement:
    if curve is not None and any(l >= curve.m for l in f.grades()):
        raise GradeOverflow("u-exponent >= m")
    return f


def parse_element(src: str, curve: CurveSpec | None = None) -> RingElement:
    p = _Parser(src, curve)
    f = p.element()
    p.expect_end()
    return _check_grades(f, curve)


def parse_differential(src: str, curve: CurveSpec) -> Differential:
    p = _Parser(src, curve)
    w = p.differential()
    p.expect_end()
    return w


def parse_expression(src: str, curve: CurveSpec):
    """RingElement if the text has no dt/du/d(, otherwise a Differential."""
    toks = tokenize(src)
    if any(t.kind == "name" and t.text in ("dt", "du", "d") for t in toks):
        return parse_differential(src, curve)
    return parse_element(src, curve)


def parse_polynomial(src: str) -> list[Fraction]:
    """Coefficients a_0..a_d of a polynomial in t (no u, no negative powers)."""
    p = _Parser(src, None, allow_u=False)
    f = p.element()
    p.expect_end()
    if any(i < 0 for (i, _) in f.terms):
        raise BadParameter("p(t) must be a polynomial (no negative powers of t)")
    deg = max((i for (i, _) in f.terms), default=0)
    coeffs = [Fraction(0)] * (deg + 1)
    for (i, _), c in f.terms.items():
        coeffs[i] = c
    return coeffs


def parse_curve(m: int, p_src: str) -> CurveSpec:
    return make_curve(m, parse_polynomial(p_src))
