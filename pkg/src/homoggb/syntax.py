"""Text syntax for polynomials.

One polynomial is a sum of terms joined by ``+``/``-``; a term is a
``*``-separated product of factors, each an integer, a fraction ``a/b``, a
variable or ``var^k``.  In the free algebra the order of variable factors is
significant and juxtaposition is not multiplication: ``X*Y`` is a word,
``XY`` is an (unknown) variable name.

Printing is canonical: terms descend in the ring order, the coefficient
sign is pulled into the joining operator, unit coefficients are dropped and
``*``/``^`` are explicit.  ``parse_polynomial(format_polynomial(f))``
reproduces ``f`` exactly.
"""

from __future__ import annotations

import re
import warnings
from fractions import Fraction

from .polynomial import Polynomial
from .rings import COMM, RingDescriptor
from .scalars import QQ, ModP


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at {line}:{col}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str, line: int):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        col = m.start(m.lastindex) + 1
        if m.group(1) is not None:
            out.append(("int", m.group(1), col))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), col))
        else:
            out.append(("op", m.group(3), col))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str, ring: RingDescriptor, line: int):
        self.ring = ring
        self.line = line
        self.toks = _tokenize(text, line)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        raise PolynomialSyntaxError(msg, self.line, tok[2])

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_int(self):
        tok = self.take()
        if tok[0] != "int":
            self.error(f"expected an integer, found {tok[1] or 'end of input'!r}", tok)
        return int(tok[1])

    def parse(self) -> Polynomial:
        ring = self.ring
        acc = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "end":
            self.error("empty polynomial")
        if tok == ("op", "-", tok[2]) or tok == ("op", "+", tok[2]):
            sign = -1 if tok[1] == "-" else 1
            self.take()
        while True:
            coeff, mono = self.term()
            c = ring.field(coeff * sign)
            acc[mono] = acc[mono] + c if mono in acc else c
            tok = self.take()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                continue
            self.error(f"unexpected {tok[1]!r}", tok)
        acc = {m: c for m, c in acc.items() if c}
        return Polynomial._from_dict(ring, acc)

    def term(self):
        ring = self.ring
        coeff = Fraction(1)
        mono = ring.one
        while True:
            tok = self.take()
            if tok[0] == "int":
                num = int(tok[1])
                den = 1
                if self.peek()[:2] == ("op", "/"):
                    self.take()
                    dtok = self.peek()
                    den = self.expect_int()
                    if den == 0:
                        self.error("zero denominator", dtok)
                coeff *= Fraction(num, den)
            elif tok[0] == "name":
                name = tok[1]
                if name not in ring.all_names:
                    self.error(f"unknown variable {name}", tok)
                k = 1
                if self.peek()[:2] == ("op", "^"):
                    self.take()
                    k = self.expect_int()
                v = ring.var_monomial(name)
                for _ in range(k):
                    mono = ring.mono_mul(mono, v)
            else:
                what = tok[1] or "end of input"
                self.error(f"expected a coefficient or variable, found {what!r}", tok)
            if self.peek()[:2] == ("op", "*"):
                self.take()
                continue
            return coeff, mono


def parse_polynomial(text: str, ring: RingDescriptor, line: int = 1) -> Polynomial:
    return _Parser(text, ring, line).parse()


_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def infer_variables(text: str, exclude=()) -> tuple:
    """Variable names appearing in ``text`` (comments ignored), sorted."""
    names = set()
    for line in text.splitlines():
        names.update(_NAME.findall(strip_comment(line)))
    return tuple(sorted(names - set(exclude)))


def parse_system(text: str, ring: RingDescriptor = None, kind: str = COMM, field=QQ,
                 homog_var: str = None):
    """Parse one polynomial per line; ``#`` starts a comment.

    Returns ``(ring, polynomials)``.  Without a ring, the variables are the
    names found in the input in sorted order (first name highest).  Lines
    that cancel to zero are skipped with a warning.
    """
    if ring is None:
        ring = RingDescriptor(kind, infer_variables(text, exclude=(homog_var,) if homog_var else ()),
                              None, homog_var, field)
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = strip_comment(raw)
        if not body.strip():
            continue
        f = parse_polynomial(body, ring, line=lineno)
        if not f:
            warnings.warn(f"line {lineno}: zero polynomial skipped", stacklevel=2)
            continue
        polys.append(f)
    return ring, polys


def _format_coeff(c):
    if isinstance(c, ModP):
        return False, str(c)
    if c < 0:
        return True, str(-c)
    return False, str(c)


def format_polynomial(f: Polynomial) -> str:
    ring = f.ring
    if not f.terms:
        return "0"
    parts = []
    for idx, (m, c) in enumerate(f.terms):
        neg, mag = _format_coeff(c)
        if m == ring.one:
            body = mag
        elif mag == "1":
            body = ring.format_monomial(m)
        else:
            body = f"{mag}*{ring.format_monomial(m)}"
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)
