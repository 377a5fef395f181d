"""Text and JSON (de)serialization of Laurent polynomials.

Text grammar (whitespace ignored)::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := unary ('^'|'**') exponent | unary
    unary  := '-' unary | atom
    atom   := integer | variable | '(' expr ')'

An exponent is ``-?\\d+(/\\d+)?`` or a parenthesized rational, so ``x1^3/2``
reads as ``x1^(3/2)``.  Variables are ``x<i>``, ``y<j>`` and the shorthands
``u<i> = x_i + 1/x_i``, ``v<j> = y_j + 1/y_j``.  For G(3) ``x3`` stands for
``(x1*x2)^-1``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import lcm

from .weightlat import LaurentPoly, MonomialOrder, NotDivisible, Weight


class PolyParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([xyuv])(\d+)|(\*\*|[-+*/^()]))")
_EXP = re.compile(r"\s*(-?\d+(?:/\d+)?)")


class _Parser:
    def __init__(self, text: str, m: int, n: int, denom: int, order: MonomialOrder | None, g3: bool):
        self.s = text
        self.pos = 0
        self.m, self.n, self.denom = m, n, denom
        self.order = order
        self.g3 = g3

    def error(self, msg):
        raise PolyParseError(f"{msg} at position {self.pos} in {self.s!r}")

    def peek(self):
        mt = _TOKEN.match(self.s, self.pos)
        if not mt:
            if self.s[self.pos:].strip():
                self.error("unexpected character")
            return None
        return mt

    def take(self, sym):
        mt = self.peek()
        if mt and mt.group(4) == sym:
            self.pos = mt.end()
            return True
        return False

    def parse(self) -> LaurentPoly:
        if not self.s.strip():
            self.error("empty input")
        p = self.expr()
        if self.pos < len(self.s) and self.s[self.pos:].strip():
            self.error("trailing input")
        return p

    def expr(self):
        if self.take("-"):
            p = -self.term()
        else:
            self.take("+")
            p = self.term()
        while True:
            if self.take("+"):
                p = p + self.term()
            elif self.take("-"):
                p = p - self.term()
            else:
                return p

    def term(self):
        p = self.power()
        while True:
            if self.take("*"):
                p = p * self.power()
            elif self.take("/"):
                p = self.divide(p, self.power())
            else:
                return p

    def divide(self, p, d):
        if d.is_zero():
            self.error("division by zero")
        if len(d) == 1:
            (e, c), = d.terms.items()
            if c in (1, -1):
                return p * d ** -1
            if not d.weight_of(e).is_zero():
                self.error("division by a monomial with non-unit coefficient")
            if any(v % c for v in p.terms.values()):
                self.error(f"coefficients are not divisible by {c}")
            return p._new({k: v // c for k, v in p.terms.items()})
        if self.order is None:
            self.error("division by a non-monomial needs an algebra context")
        try:
            return p.exact_divide(d, self.order)
        except NotDivisible as exc:
            self.error(f"inexact division ({exc})")

    def exponent(self) -> Fraction:
        if self.take("("):
            neg = self.take("-")
            mt = _EXP.match(self.s, self.pos)
            if not mt:
                self.error("bad exponent")
            self.pos = mt.end()
            if not self.take(")"):
                self.error("missing ')' after exponent")
            v = Fraction(mt.group(1))
            return -v if neg else v
        mt = _EXP.match(self.s, self.pos)
        if not mt:
            self.error("bad exponent")
        self.pos = mt.end()
        return Fraction(mt.group(1))

    def power(self):
        if self.take("-"):
            return -self.power()
        base = self.atom()
        if self.take("^") or self.take("**"):
            k = self.exponent()
            if len(base) == 1 and abs(next(iter(base.terms.values()))) == 1:
                (e, c), = base.terms.items()
                if c == -1 and k.denominator != 1:
                    self.error("fractional power of a negative monomial")
                w = base.weight_of(e) * k
                d = lcm(self.denom, w.min_denom())
                sign = c ** int(k) if k.denominator == 1 else 1
                return LaurentPoly.monomial(w, sign, d)
            if k.denominator != 1 or k < 0:
                self.error("only monomials take negative or fractional powers")
            return base ** int(k)
        return base

    def atom(self):
        mt = self.peek()
        if mt is None:
            self.error("unexpected end of input")
        if mt.group(1) is not None:
            self.pos = mt.end()
            return LaurentPoly.const(int(mt.group(1)), self.m, self.n, self.denom)
        if mt.group(2):
            self.pos = mt.end()
            return self.variable(mt.group(2), int(mt.group(3)))
        if mt.group(4) == "(":
            self.pos = mt.end()
            p = self.expr()
            if not self.take(")"):
                self.error("missing ')'")
            return p
        self.error(f"unexpected token {mt.group(4)!r}")

    def variable(self, kind, idx):
        m, n, d = self.m, self.n, self.denom
        if kind in "xu":
            if self.g3 and idx == 3:
                x = LaurentPoly(m, n, {tuple([-d, -d] + [0] * n): 1}, d)
            elif 1 <= idx <= m:
                x = LaurentPoly.variable(idx - 1, m, n, 1, d)
            else:
                self.error(f"no variable x{idx} (m = {m})")
        else:
            if 1 <= idx <= n:
                x = LaurentPoly.variable(m + idx - 1, m, n, 1, d)
            else:
                self.error(f"no variable y{idx} (n = {n})")
        if kind in "uv":
            return x + x ** -1
        return x


def parse_poly(text: str, m: int, n: int, denom: int = 2, order: MonomialOrder | None = None,
               g3: bool = False) -> LaurentPoly:
    return _Parser(text, m, n, denom, order, g3).parse()


def parse_poly_for(text: str, a) -> LaurentPoly:
    """Parse in the variables of an AlgebraDatum (accepts text or JSON)."""
    s = text.strip()
    if s.startswith("{"):
        p = poly_from_json(s)
        if p.m != a.m or p.n != a.n:
            raise PolyParseError(f"JSON polynomial has shape ({p.m}|{p.n}), expected ({a.m}|{a.n})")
        return p
    return parse_poly(s, a.m, a.n, a.denom, a.order, a.family == "G3")


def _fmt_exp(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def format_monomial(w: Weight, names=None) -> str:
    if names is None:
        names = [f"x{i + 1}" for i in range(w.m)] + [f"y{j + 1}" for j in range(w.n)]
    parts = []
    for name, c in zip(names, w.coords):
        if c == 1:
            parts.append(name)
        elif c:
            parts.append(f"{name}^{_fmt_exp(c)}")
    return "*".join(parts)


def format_poly(f: LaurentPoly, names=None) -> str:
    """Canonical text: terms in descending lex order of exponent vectors."""
    if f.is_zero():
        return "0"
    out = []
    for i, (w, c) in enumerate(f.items()):
        mono = format_monomial(w, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def poly_to_dict(f: LaurentPoly) -> dict:
    terms = []
    for e in f.sorted_exponents():
        terms.append({"coef": str(f.terms[e]), "e": list(e[:f.m]), "d": list(e[f.m:])})
    return {"m": f.m, "n": f.n, "denom": f.denom, "terms": terms}


def poly_to_json(f: LaurentPoly) -> str:
    return json.dumps(poly_to_dict(f), separators=(",", ":"))


def poly_from_dict(obj: dict) -> LaurentPoly:
    try:
        m, n, denom = int(obj["m"]), int(obj["n"]), int(obj["denom"])
        terms = {}
        for t in obj["terms"]:
            e, d = [int(v) for v in t["e"]], [int(v) for v in t["d"]]
            if len(e) != m or len(d) != n:
                raise PolyParseError("exponent vector length does not match (m|n)")
            key = tuple(e + d)
            if key in terms:
                raise PolyParseError(f"duplicate exponent {key}")
            terms[key] = int(t["coef"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PolyParseError):
            raise
        raise PolyParseError(f"malformed polynomial JSON: {exc}") from None
    if denom < 1:
        raise PolyParseError("denom must be positive")
    return LaurentPoly(m, n, terms, denom)


def poly_from_json(text: str) -> LaurentPoly:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolyParseError(f"invalid JSON: {exc}") from None
    return poly_from_dict(obj)
