"""Parsing and printing of noncommutative polynomial expressions.

Grammar (whitespace ignored):

    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' natural)?
    atom     := 'x'|'u'|'v'|'y'|'D'|'h'|'g'|rational
              | 'sqrt' '(' natural ')' | '(' expr ')'
    rational := natural ('/' natural)?

'D' abbreviates the quantum determinant xy - uv - h*x*v and expands at
parse time.  Parsed input is normalized eagerly, so two spellings of the
same ring element always parse to the identical NCPoly.  The text printer
is the inverse of the parser on normal forms: parse(render_text(p)) == p.
"""

import json
import re

from . import ncalg
from ._rat import Q, qstr
from .ncalg import NCPoly
from .scalar import G, H, RadScalar, sqrt_nat


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(.))")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m or m.end() == m.start():
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        i = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None, what=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {what or kind}, found {tok[1]!r}", tok[2])
        self.k += 1
        return tok

    def parse(self) -> NCPoly:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> NCPoly:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            value = value - rhs if op == "-" else value + rhs
        return value

    def term(self) -> NCPoly:
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> NCPoly:
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int", "a natural number exponent")
            value = value ** int(tok[1])
        return value

    def atom(self) -> NCPoly:
        tok = self.peek()
        kind, text, pos = tok
        if kind == "int":
            self.take()
            num = int(text)
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int", "a denominator")
                return NCPoly.scalar(Q(num, int(den[1])), self.ring)
            return NCPoly.scalar(Q(num), self.ring)
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")", "')'")
            return value
        if kind == "name":
            self.take()
            if text in ncalg.GEN_INDEX:
                return NCPoly.generator(text, self.ring)
            if text == "D":
                return ncalg.quantum_determinant(self.ring)
            if text == "h":
                return NCPoly.scalar(H, self.ring)
            if text == "g":
                return NCPoly.scalar(G, self.ring)
            if text == "sqrt":
                self.take("(", "'('")
                arg = self.take("int", "a natural number radicand")
                self.take(")", "')'")
                return NCPoly.scalar(sqrt_nat(int(arg[1])), self.ring)
            raise ParseError(f"unknown symbol {text!r}", pos)
        raise ParseError(f"expected an atom, found {text!r}", pos)


def parse(text: str, ring=ncalg.SL) -> NCPoly:
    """Parse an expression into its normal form in the given ring."""
    ncalg.check_ring(ring)
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------
# Printers
# ---------------------------------------------------------------------


def _monomial_text(rad, hp, gp, q):
    factors = []
    if q.denominator != 1:
        factors.append(qstr(q if q > 0 else -q))
    elif abs(q) != 1:
        factors.append(str(q if q > 0 else -q))
    if rad != 1:
        factors.append(f"sqrt({rad})")
    if hp:
        factors.append("h" if hp == 1 else f"h^{hp}")
    if gp:
        factors.append("g" if gp == 1 else f"g^{gp}")
    return ("-" if q < 0 else ""), factors


def scalar_text(c: RadScalar) -> str:
    """Render a RadScalar in the expression grammar."""
    if c.is_zero():
        return "0"
    parts = []
    for rad, hp, gp, q in c.terms():
        sign, factors = _monomial_text(rad, hp, gp, q)
        body = "*".join(factors) if factors else "1"
        if not parts:
            parts.append(sign + body)
        else:
            parts.append(("- " if sign else "+ ") + body)
    return " ".join(parts)


def _word_text(exps, sep="*"):
    parts = []
    for g, e in zip(ncalg.GEN_NAMES, exps):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return sep.join(parts)


def render_text(p: NCPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for exps, coef in p.sorted_terms():
        word = _word_text(exps)
        monos = list(coef.terms())
        if len(monos) > 1:
            piece = f"({scalar_text(coef)})"
            if word:
                piece += "*" + word
            sign, body = "", piece
        else:
            rad, hp, gp, q = monos[0]
            sign, factors = _monomial_text(rad, hp, gp, q)
            if word:
                factors.append(word)
            body = "*".join(factors) if factors else "1"
        if not out:
            out.append(sign + body)
        else:
            out.append(("- " if sign else "+ ") + body)
    return " ".join(out)


def _monomial_latex(rad, hp, gp, q):
    factors = []
    if q.denominator != 1:
        a = abs(q)
        factors.append(rf"\frac{{{a.numerator}}}{{{a.denominator}}}")
    elif abs(q) != 1:
        factors.append(str(abs(q)))
    if rad != 1:
        factors.append(rf"\sqrt{{{rad}}}")
    if hp:
        factors.append("h" if hp == 1 else f"h^{{{hp}}}")
    if gp:
        factors.append("g" if gp == 1 else f"g^{{{gp}}}")
    return ("-" if q < 0 else ""), factors


def scalar_latex(c: RadScalar) -> str:
    if c.is_zero():
        return "0"
    parts = []
    for rad, hp, gp, q in c.terms():
        sign, factors = _monomial_latex(rad, hp, gp, q)
        body = " ".join(factors) if factors else "1"
        if not parts:
            parts.append(sign + body)
        else:
            parts.append(("- " if sign else "+ ") + body)
    return " ".join(parts)


def _word_latex(exps):
    parts = []
    for g, e in zip(ncalg.GEN_NAMES, exps):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{{{e}}}")
    return " ".join(parts)


def render_latex(p: NCPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for exps, coef in p.sorted_terms():
        word = _word_latex(exps)
        monos = list(coef.terms())
        if len(monos) > 1:
            piece = f"({scalar_latex(coef)})"
            body = f"{piece} {word}" if word else piece
            sign = ""
        else:
            rad, hp, gp, q = monos[0]
            sign, factors = _monomial_latex(rad, hp, gp, q)
            if word:
                factors.append(word)
            body = " ".join(factors) if factors else "1"
        if not out:
            out.append(sign + body)
        else:
            out.append(("- " if sign else "+ ") + body)
    return " ".join(out)


def render(p: NCPoly, fmt: str = "text") -> str:
    """Render an NCPoly as text, latex or json."""
    if fmt == "text":
        return render_text(p)
    if fmt == "latex":
        return render_latex(p)
    if fmt == "json":
        return json.dumps(p.to_json())
    raise ValueError(f"unknown format {fmt!r}")
