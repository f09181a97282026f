"""ASCII expression language for operator expressions.

Grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' ['+'|'-'] integer)?
    atom   := generator | 'i' | 'hbar' | 'c' | 'm' | number
            | '(' expr ')'
            | ('comm'|'acomm'|'sym') '(' expr ',' expr ')'

Generators are ``t``, ``x``, ``p``, ``H`` in the relativistic algebra and
``x``, ``p`` in the nonrelativistic one. ``/`` only accepts a right operand
that is an invertible scalar (a single unit monomial).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebras import AlgebraSpec
from .errors import ExprSyntaxError, NonInvertibleScalarError
from .opalg import OpExpr, Word, brackets
from .scalar import ONE, UNIT_NAMES, Gauss, Scalar

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_BRACKET_NAMES = ("comm", "acomm", "sym")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ExprSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, spec: AlgebraSpec):
        self.spec = spec
        self.gens = spec.names
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.tok
        if val != value or kind == "end":
            found = "end of input" if kind == "end" else repr(val)
            raise ExprSyntaxError(f"expected {value!r}, found {found}", pos)
        self.advance()

    def parse(self) -> OpExpr:
        e = self.expr()
        kind, val, pos = self.tok
        if kind != "end":
            raise ExprSyntaxError(f"unexpected token {val!r}", pos)
        return e

    def expr(self) -> OpExpr:
        sign = None
        if self.tok[1] in ("+", "-") and self.tok[0] == "op":
            sign = self.advance()[1]
        e = self.term()
        if sign == "-":
            e = -e
        while self.tok[0] == "op" and self.tok[1] in ("+", "-"):
            op = self.advance()[1]
            rhs = self.term()
            e = e + rhs if op == "+" else e - rhs
        return e

    def term(self) -> OpExpr:
        e = self.factor()
        while self.tok[0] == "op" and self.tok[1] in ("*", "/"):
            op, pos = self.advance()[1], self.tok[2]
            rhs = self.factor()
            if op == "*":
                e = e * rhs
            else:
                s = rhs.as_scalar()
                if s is None:
                    raise ExprSyntaxError("division by an operator is not allowed", pos)
                try:
                    e = e.scale(s.inverse())
                except NonInvertibleScalarError as exc:
                    raise ExprSyntaxError(f"division by non-invertible scalar: {exc}", pos) from None
        return e

    def factor(self) -> OpExpr:
        start = self.tok[2]
        base = self.atom()
        if not (self.tok[0] == "op" and self.tok[1] == "^"):
            return base
        self.advance()
        sign = 1
        if self.tok[0] == "op" and self.tok[1] in ("+", "-"):
            sign = -1 if self.advance()[1] == "-" else 1
        kind, val, pos = self.tok
        if kind != "num" or not val.isdigit():
            raise ExprSyntaxError("exponent must be an integer", pos)
        self.advance()
        return self._power(base, sign * int(val), start)

    def _power(self, base: OpExpr, k: int, pos: int) -> OpExpr:
        if k >= 0:
            return base**k
        s = base.as_scalar()
        if s is not None:
            try:
                return OpExpr.scalar(s.inverse() ** (-k), self.gens)
            except NonInvertibleScalarError as exc:
                raise ExprSyntaxError(f"cannot invert scalar: {exc}", pos) from None
        if len(base.terms) == 1:
            (word, coeff), = base.terms.items()
            if len(word) == 1 and coeff == ONE:
                gen, power = word[0]
                if not self.spec.generator(gen).invertible:
                    raise ExprSyntaxError(f"generator {gen!r} is not invertible", pos)
                return OpExpr.gen(gen, self.gens, power * k)
        raise ExprSyntaxError("negative powers apply only to invertible generators or scalars", pos)

    def atom(self) -> OpExpr:
        kind, val, pos = self.advance()
        if kind == "num":
            return OpExpr.scalar(Fraction(val), self.gens)
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "name":
            if val in _BRACKET_NAMES:
                self.expect("(")
                a = self.expr()
                self.expect(",")
                b = self.expr()
                self.expect(")")
                return brackets(a, b, val, self.spec)
            if val == "i":
                return OpExpr.scalar(Scalar.number(0, 1), self.gens)
            if val in UNIT_NAMES:
                return OpExpr.scalar(Scalar.unit(val), self.gens)
            if val in self.gens:
                return OpExpr.gen(val, self.gens)
            raise ExprSyntaxError(
                f"unknown generator {val!r} for algebra {self.spec.name!r}", pos
            )
        if kind == "end":
            raise ExprSyntaxError("unexpected end of input", pos)
        raise ExprSyntaxError(f"unexpected token {val!r}", pos)


def parse(text: str, spec: AlgebraSpec) -> OpExpr:
    """Parse ``text`` into a formal expression over ``spec``'s generators.

    Brackets (``comm``, ``acomm``, ``sym``) are normalized when built; the
    rest of the expression is left formal.
    """
    return _Parser(text, spec).parse()


def _power_str(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def _rational_str(q: Fraction) -> str:
    return str(q)


def _unit_factors(mono) -> list[str]:
    return [_power_str(name, k) for name, k in zip(UNIT_NAMES, mono) if k]


def _monomial_parts(mono, coeff: Gauss) -> tuple[int, list[str]]:
    """Sign and ``*``-joined pieces of one coefficient monomial."""
    units = _unit_factors(mono)
    if coeff.im == 0 or coeff.re == 0:
        q = coeff.re if coeff.im == 0 else coeff.im
        sign = -1 if q < 0 else 1
        pieces = []
        if abs(q) != 1:
            pieces.append(_rational_str(abs(q)))
        if coeff.im != 0:
            pieces.append("i")
        return sign, pieces + units
    im = abs(coeff.im)
    im_text = "i" if im == 1 else f"{_rational_str(im)}*i"
    op = "-" if coeff.im < 0 else "+"
    return 1, [f"({_rational_str(coeff.re)} {op} {im_text})"] + units


def _join_signed(parts: list[tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for idx, (sign, body) in enumerate(parts):
        if idx == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


def render_scalar(s: Scalar) -> str:
    parts = []
    for mono, coeff in s.items():
        sign, pieces = _monomial_parts(mono, coeff)
        parts.append((sign, "*".join(pieces) or "1"))
    return _join_signed(parts)


def word_key(word: Word, generators) -> tuple:
    """Sort key: descending powers in generator order (so x*p before 1)."""
    powers = dict(word)
    return tuple(-powers.get(g, 0) for g in generators)


def render(e: OpExpr) -> str:
    """Deterministic text for an expression; expected to be normalized."""
    parts = []
    for word in sorted(e.terms, key=lambda w: (word_key(w, e.generators), str(w))):
        coeff = e.terms[word]
        word_pieces = [_power_str(g, k) for g, k in word]
        if coeff.is_monomial():
            (mono, gauss), = coeff.terms.items()
            sign, pieces = _monomial_parts(mono, gauss)
        else:
            sign, pieces = 1, [f"({render_scalar(coeff)})"]
        parts.append((sign, "*".join(pieces + word_pieces) or "1"))
    return _join_signed(parts)
